#include "tropnev/smt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace tropnev {

unsigned common_degree(std::span<const HomogeneousPolynomial> hypersurfaces) {
  unsigned d = 1;
  for (const auto& P : hypersurfaces) d = std::lcm(d, P.degree());
  return d;
}

CombinationBasis combination_of(const HomogeneousPolynomial& P, const ProjectiveMap& f, unsigned d) {
  if (d % P.degree() != 0) throw Error(Errc::invalid_argument, "degree does not divide the common degree");
  HomogeneousPolynomial Pk = P.power(d / P.degree());
  CombinationBasis comb;
  for (const auto& I : degree_indices(P.m(), d)) {
    comb.basis.push_back(monomial_of_map(f, I));
    comb.coeffs.push_back(Pk.coeff(I));
  }
  return comb;
}

namespace {

struct Setup {
  std::size_t m = 0, q = 0, M = 0;
  unsigned d = 1;
  DdgResult lambda;
};

Setup prepare(const ProjectiveMap& f, std::span<const HomogeneousPolynomial> Ps,
              const SphereQuadrature& quad, const SmtOptions& opts) {
  Setup s;
  s.m = f.target_dim();
  s.q = Ps.size();
  if (s.q == 0 || s.q < s.m) {
    throw Error(Errc::too_few_hypersurfaces, "need q >= m hypersurfaces (q = " + std::to_string(s.q) +
                                                 ", m = " + std::to_string(s.m) + ")");
  }
  check_dim(f.dim(), quad.dim);
  for (const auto& P : Ps) {
    if (P.m() != s.m) throw Error(Errc::arity_mismatch, "hypersurface and map disagree on m");
    require_nondegenerate(P, f, quad, opts.probe, opts.tol);
  }
  s.d = common_degree(Ps);
  s.M = binomial(s.m + s.d, s.d) - 1;
  std::vector<CombinationBasis> tail;
  for (std::size_t j = s.M + 1; j < s.q; ++j) tail.push_back(combination_of(Ps[j], f, s.d));
  s.lambda = ddg(tail, s.M + 1, opts.essential);
  return s;
}

void check_grid(std::span<const double> r_grid) {
  if (r_grid.empty()) throw Error(Errc::invalid_argument, "empty radius grid");
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    if (!(r_grid[k] > 0.0) || (k > 0 && !(r_grid[k] > r_grid[k - 1]))) {
      throw Error(Errc::invalid_argument, "radius grid must be positive and strictly increasing");
    }
  }
}

SmtReport run_smt(const ProjectiveMap& f, std::span<const HomogeneousPolynomial> Ps,
                  bool q_variant,
                  std::span<const double> c, double scale, std::span<const double> r_grid,
                  const SphereQuadrature& quad, const SmtOptions& opts) {
  check_grid(r_grid);
  Setup s = prepare(f, Ps, quad, opts);

  SmtReport rep;
  rep.m = s.m;
  rep.q = s.q;
  rep.d = s.d;
  rep.M = s.M;
  for (const auto& P : Ps) rep.degrees.push_back(P.degree());
  rep.q_variant = q_variant;
  rep.shift.assign(c.begin(), c.end());
  rep.scale = scale;
  rep.lambda_min = s.lambda.min;
  rep.lambda_max = s.lambda.max;
  rep.lambda_exact = s.lambda.exact;
  const double excess = static_cast<double>(s.q) - static_cast<double>(s.M) - 1.0;
  rep.vacuous = excess - static_cast<double>(rep.lambda_min) <= 0.0;
  rep.casorati_available = s.q >= s.M + 1;

  const double R = r_grid.back();
  std::vector<RadialProfile> roots;
  for (const auto& P : Ps) roots.push_back(RadialProfile(TropicalRational(compose(P, f)), quad, R).negated());

  std::optional<RadialProfile> cas;
  if (rep.casorati_available) {
    std::vector<TropicalPolynomial> base;
    for (std::size_t j = 0; j <= s.M; ++j) base.push_back(compose(Ps[j].power(s.d / Ps[j].degree()), f));
    ShiftFamily fam = q_variant ? ShiftFamily::q_family(std::move(base), scale)
                                : ShiftFamily(std::move(base), std::vector<double>(c.begin(), c.end()));
    cas = RadialProfile(casorati_function(fam), quad, R, opts.blackbox).negated();
  }

  rep.fmt_excess.assign(s.q, -std::numeric_limits<double>::infinity());
  std::vector<double> Ts;
  for (double r : r_grid) {
    SmtRow row;
    row.r = r;
    row.T_f = cartan_characteristic(f, r, quad);
    double all = 0.0, tail = 0.0;
    for (std::size_t j = 0; j < s.q; ++j) {
      double Nj = roots[j].counting(r);
      row.N.push_back(Nj);
      all += Nj / Ps[j].degree();
      if (j >= s.M + 1) tail += Nj / Ps[j].degree();
      rep.fmt_excess[j] = std::max(rep.fmt_excess[j], Nj - Ps[j].degree() * row.T_f);
    }
    row.casorati_N = cas ? cas->counting(r) : 0.0;
    row.lhs = (excess - static_cast<double>(rep.lambda_min)) * row.T_f;
    row.lhs_lambda_max = (excess - static_cast<double>(rep.lambda_max)) * row.T_f;
    row.middle = all - row.casorati_N / s.d;
    row.rhs = tail;
    row.upper = excess * row.T_f;
    row.slack = row.rhs - row.lhs;
    row.slack_lambda_max = row.rhs - row.lhs_lambda_max;
    row.middle_slack = row.middle - row.lhs;
    if (row.slack < -opts.tol) rep.violations.push_back(r);
    Ts.push_back(row.T_f);
    rep.rows.push_back(std::move(row));
  }

  const SmtRow& last = rep.rows.back();
  rep.trend_ratio = last.T_f > 0.0 ? last.slack / last.T_f : 0.0;
  rep.trend_ok = last.slack >= -opts.trend_fraction * last.T_f;
  if (r_grid.back() / r_grid.front() >= 1000.0) {
    try {
      rep.growth = estimate_growth(r_grid, Ts);
      rep.growth_available = true;
    } catch (const Error&) {
      rep.growth_available = false;
    }
  }
  return rep;
}

}  // namespace

SmtReport smt_check(const ProjectiveMap& f, std::span<const HomogeneousPolynomial> hypersurfaces,
                    std::span<const double> c, std::span<const double> r_grid,
                    const SphereQuadrature& quad, const SmtOptions& opts) {
  check_dim(f.dim(), c.size());
  return run_smt(f, hypersurfaces, false, c, 0.0, r_grid, quad, opts);
}

SmtReport q_smt_check(const ProjectiveMap& f, std::span<const HomogeneousPolynomial> hypersurfaces,
                      double scale, std::span<const double> r_grid, const SphereQuadrature& quad,
                      const SmtOptions& opts) {
  if (scale == 0.0 || scale == 1.0 || !std::isfinite(scale)) {
    throw Error(Errc::excluded_scale, "q-shifts need a scale outside {0, 1}");
  }
  return run_smt(f, hypersurfaces, true, {}, scale, r_grid, quad, opts);
}

DefectRelationReport defect_relation_check(const ProjectiveMap& f,
                                           std::span<const HomogeneousPolynomial> hypersurfaces,
                                           std::span<const double> r_grid,
                                           const SphereQuadrature& quad, const SmtOptions& opts) {
  check_grid(r_grid);
  Setup s = prepare(f, hypersurfaces, quad, opts);
  DefectRelationReport rep;
  rep.M = s.M;
  rep.d = s.d;
  rep.lambda_min = s.lambda.min;
  rep.lambda_max = s.lambda.max;
  for (std::size_t j = 0; j < s.q; ++j) {
    double dj = defect(hypersurfaces[j], f, r_grid, quad).value;
    rep.defects.push_back(dj);
    rep.sum_all += dj;
    if (j >= s.M + 1) rep.sum_tail += dj;
  }
  rep.bound_all = static_cast<double>(s.M + 1 + s.lambda.max);
  rep.bound_tail = static_cast<double>(s.lambda.max);
  // Grid estimates of a liminf get the same finite-r allowance as the slack trend.
  const double slack = opts.trend_fraction;
  rep.holds = rep.sum_all <= rep.bound_all + slack && rep.sum_tail <= rep.bound_tail + slack;
  return rep;
}

}  // namespace tropnev
