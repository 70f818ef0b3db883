#include "tropnev/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace tropnev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> scaled_node(std::span<const double> node, double r) {
  std::vector<double> x(node.begin(), node.end());
  for (double& c : x) c *= r;
  return x;
}

// Number of terms within tol of the maximum at x (terms have distinct exponents).
std::size_t active_terms(const TropicalPolynomial& p, std::span<const double> x, double tol) {
  double vmax = p.eval(x);
  double cut = vmax - tol * std::max(1.0, std::abs(vmax));
  std::size_t n = 0;
  for (const auto& t : p.terms()) n += t.eval(x) >= cut;
  return n;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<TropicalNumber> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(Errc::bad_size, "projective point needs coordinates");
  if (std::all_of(coords_.begin(), coords_.end(), [](TropicalNumber c) { return c.is_bottom(); })) {
    throw Error(Errc::invalid_argument, "projective point with all coordinates -inf");
  }
}

ProjectivePoint ProjectivePoint::normalized() const {
  double top = std::max_element(coords_.begin(), coords_.end())->value();
  return scaled(-top);
}

ProjectivePoint ProjectivePoint::scaled(double lambda) const {
  std::vector<TropicalNumber> out = coords_;
  for (auto& c : out) c = t_mul(c, TropicalNumber(lambda));
  return ProjectivePoint(std::move(out));
}

bool ProjectivePoint::equivalent(const ProjectivePoint& other, double tol) const {
  if (coords_.size() != other.coords_.size()) return false;
  auto a = normalized().coords(), b = other.normalized().coords();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!tropical_close(a[k], b[k], tol)) return false;
  }
  return true;
}

ProjectiveMap::ProjectiveMap(std::vector<TropicalPolynomial> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw Error(Errc::bad_size, "projective map needs components");
  for (const auto& c : components_) check_dim(components_.front().dim(), c.dim());
}

ProjectiveMap ProjectiveMap::from_rational(const TropicalRational& f) {
  return ProjectiveMap({f.den(), f.num()});
}

std::vector<double> ProjectiveMap::eval(std::span<const double> x) const {
  std::vector<double> y;
  y.reserve(components_.size());
  for (const auto& c : components_) y.push_back(c.eval(x));
  return y;
}

double ProjectiveMap::norm(std::span<const double> x) const {
  double best = -kInf;
  for (const auto& c : components_) best = std::max(best, c.eval(x));
  return best;
}

ReducedCheck check_reduced(const ProjectiveMap& f, const SphereQuadrature& quad, double tol) {
  check_dim(f.dim(), quad.dim);
  ReducedCheck out;
  out.exact = f.dim() == 1;
  const auto& comps = f.components();
  auto common = [&](std::span<const double> x) {
    return std::all_of(comps.begin(), comps.end(),
                       [&](const TropicalPolynomial& p) { return active_terms(p, x, tol) >= 2; });
  };
  // Every common root is a corner of component 0, so its corners are the candidates.
  for (std::size_t i : quad.pair_leaders()) {
    RaySlice s = ray_slice(comps.front(), quad.nodes[i], kUnboundedRadius, tol);
    for (const auto& b : s.breakpoints) {
      auto x = scaled_node(quad.nodes[i], b.t);
      if (common(x)) {
        out.reduced = false;
        out.common_root = std::move(x);
        return out;
      }
    }
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<unsigned>> degree_indices(std::size_t m, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(m + 1, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == m) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t m, unsigned d, std::vector<HomogeneousTerm> terms)
    : m_(m), d_(d) {
  if (d == 0) throw Error(Errc::invalid_argument, "hypersurface degree must be positive");
  std::map<std::vector<unsigned>, TropicalNumber> merged;
  for (auto& t : terms) {
    if (t.index.size() != m + 1) throw Error(Errc::arity_mismatch, "index length must be m + 1");
    unsigned sum = 0;
    for (unsigned i : t.index) sum += i;
    if (sum != d) throw Error(Errc::invalid_argument, "index does not sum to the degree");
    if (t.coeff.is_bottom()) continue;
    auto [it, fresh] = merged.emplace(t.index, t.coeff);
    if (!fresh) it->second = t_add(it->second, t.coeff);
  }
  if (merged.empty()) throw Error(Errc::invalid_argument, "hypersurface needs a finite coefficient");
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) terms_.push_back({it->first, it->second});
}

std::size_t HomogeneousPolynomial::M() const { return binomial(m_ + d_, d_) - 1; }
bool HomogeneousPolynomial::is_complete() const { return terms_.size() == M() + 1; }
std::size_t HomogeneousPolynomial::finite_count() const { return terms_.size(); }

double HomogeneousPolynomial::max_coeff() const {
  double v = -kInf;
  for (const auto& t : terms_) v = std::max(v, t.coeff.value());
  return v;
}

double HomogeneousPolynomial::min_coeff() const {
  double v = kInf;
  for (const auto& t : terms_) v = std::min(v, t.coeff.value());
  return v;
}

TropicalNumber HomogeneousPolynomial::coeff(std::span<const unsigned> index) const {
  for (const auto& t : terms_) {
    if (std::equal(t.index.begin(), t.index.end(), index.begin(), index.end())) return t.coeff;
  }
  return TropicalNumber::bottom();
}

double HomogeneousPolynomial::eval(std::span<const double> y) const {
  if (y.size() != m_ + 1) throw Error(Errc::arity_mismatch, "point has the wrong number of coordinates");
  double best = -kInf;
  for (const auto& t : terms_) {
    double s = t.coeff.value();
    for (std::size_t k = 0; k <= m_; ++k) s += t.index[k] * y[k];
    best = std::max(best, s);
  }
  return best;
}

HomogeneousPolynomial HomogeneousPolynomial::power(unsigned k) const {
  if (k == 0) throw Error(Errc::invalid_argument, "power must be positive");
  std::vector<HomogeneousTerm> out;
  for (const auto& t : terms_) {
    HomogeneousTerm s{t.index, TropicalNumber(k * t.coeff.value())};
    for (auto& i : s.index) i *= k;
    out.push_back(std::move(s));
  }
  return HomogeneousPolynomial(m_, d_ * k, std::move(out));
}

namespace {

void check_arity(const HomogeneousPolynomial& P, const ProjectiveMap& f) {
  if (P.m() + 1 != f.components().size()) {
    throw Error(Errc::arity_mismatch, "hypersurface has " + std::to_string(P.m() + 1) +
                                          " variables, map has " +
                                          std::to_string(f.components().size()) + " components");
  }
}

}  // namespace

TropicalPolynomial monomial_of_map(const ProjectiveMap& f, std::span<const unsigned> index,
                                   std::size_t limit) {
  if (index.size() != f.components().size()) throw Error(Errc::arity_mismatch, "index length");
  TropicalPolynomial out = TropicalPolynomial::unit(f.dim());
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] == 0) continue;
    out = t_mul(out, t_pow(f.components()[k], index[k], limit), limit);
  }
  return out;
}

TropicalPolynomial compose(const HomogeneousPolynomial& P, const ProjectiveMap& f, std::size_t limit) {
  check_arity(P, f);
  // Powers of each component are shared between monomials.
  std::vector<std::vector<TropicalPolynomial>> powers(f.components().size());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    powers[k].push_back(TropicalPolynomial::unit(f.dim()));
    for (unsigned e = 1; e <= P.degree(); ++e) {
      powers[k].push_back(t_mul(powers[k].back(), f.components()[k], limit));
    }
  }
  std::vector<Monomial> terms;
  for (const auto& t : P.terms()) {
    TropicalPolynomial prod = TropicalPolynomial::constant(f.dim(), t.coeff.value());
    for (std::size_t k = 0; k < t.index.size(); ++k) {
      if (t.index[k] > 0) prod = t_mul(prod, powers[k][t.index[k]], limit);
    }
    terms.insert(terms.end(), prod.terms().begin(), prod.terms().end());
    if (terms.size() > limit) throw Error(Errc::term_limit, "composition exceeds the term limit");
  }
  return TropicalPolynomial(f.dim(), std::move(terms));
}

double compose_eval(const HomogeneousPolynomial& P, const ProjectiveMap& f, std::span<const double> x) {
  check_arity(P, f);
  return P.eval(f.eval(x));
}

double cartan_characteristic(const ProjectiveMap& f, double r, const SphereQuadrature& quad) {
  check_dim(f.dim(), quad.dim);
  if (!(r > 0.0)) throw Error(Errc::invalid_argument, "radius must be positive");
  double acc = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) acc += quad.weights[i] * f.norm(scaled_node(quad.nodes[i], r));
  return acc - f.norm(std::vector<double>(f.dim(), 0.0));
}

double weil_function(const HomogeneousPolynomial& P, const ProjectiveMap& f, std::span<const double> x) {
  check_arity(P, f);
  auto y = f.eval(x);
  double norm = *std::max_element(y.begin(), y.end());
  return P.degree() * norm + P.max_coeff() - P.eval(y);
}

double hyper_proximity(const HomogeneousPolynomial& P, const ProjectiveMap& f, double r,
                       const SphereQuadrature& quad) {
  check_dim(f.dim(), quad.dim);
  if (!(r > 0.0)) throw Error(Errc::invalid_argument, "radius must be positive");
  double acc = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    acc += quad.weights[i] * weil_function(P, f, scaled_node(quad.nodes[i], r));
  }
  return acc;
}

bool is_nondegenerate(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                      const SphereQuadrature& quad, const ProbeOptions& probe, double tol) {
  check_arity(P, f);
  check_dim(f.dim(), quad.dim);
  if (P.finite_count() < 2) return false;

  auto strict_top = [&](std::span<const double> x) {
    auto y = f.eval(x);
    double first = -kInf, second = -kInf;
    for (const auto& t : P.terms()) {
      double s = t.coeff.value();
      for (std::size_t k = 0; k < y.size(); ++k) s += t.index[k] * y[k];
      if (s > first) {
        second = first;
        first = s;
      } else if (s > second) {
        second = s;
      }
    }
    return first - second > tol * std::max(1.0, std::abs(first));
  };

  if (strict_top(std::vector<double>(f.dim(), 0.0))) return true;
  for (double r : {1.0, 10.0, probe.radius}) {
    for (const auto& node : quad.nodes) {
      if (strict_top(scaled_node(node, r))) return true;
    }
  }
  std::mt19937_64 gen(probe.seed);
  std::vector<double> x(f.dim());
  for (std::size_t s = 0; s < probe.samples; ++s) {
    for (double& c : x) c = probe.radius * (2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0);
    if (strict_top(x)) return true;
  }
  return false;
}

void require_nondegenerate(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                           const SphereQuadrature& quad, const ProbeOptions& probe, double tol) {
  if (!is_nondegenerate(P, f, quad, probe, tol)) {
    throw Error(Errc::degenerate_map, "no probe point has a single dominant term; f may lie in V_P");
  }
}

double HyperFmtTable::spread() const {
  if (residual.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(residual.begin(), residual.end());
  return *hi - *lo;
}

namespace {

void check_grid(std::span<const double> r_grid) {
  if (r_grid.empty()) throw Error(Errc::invalid_argument, "empty radius grid");
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    if (!(r_grid[k] > 0.0) || (k > 0 && !(r_grid[k] > r_grid[k - 1]))) {
      throw Error(Errc::invalid_argument, "radius grid must be positive and strictly increasing");
    }
  }
}

// N(r, 1_T (/) P o f) on the whole grid.
std::vector<double> composed_root_counting(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                                           std::span<const double> r_grid, const SphereQuadrature& quad) {
  RadialProfile prof = RadialProfile(TropicalRational(compose(P, f)), quad, r_grid.back()).negated();
  std::vector<double> out;
  for (double r : r_grid) out.push_back(prof.counting(r));
  return out;
}

}  // namespace

HyperFmtTable hyper_fmt_residual(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                                 std::span<const double> r_grid, const SphereQuadrature& quad) {
  check_grid(r_grid);
  require_nondegenerate(P, f, quad);
  HyperFmtTable t;
  t.Nf = composed_root_counting(P, f, r_grid, quad);
  for (double r : r_grid) {
    t.r.push_back(r);
    t.mf.push_back(hyper_proximity(P, f, r, quad));
    t.dTf.push_back(P.degree() * cartan_characteristic(f, r, quad));
    t.residual.push_back(t.mf.back() + t.Nf[t.r.size() - 1] - t.dTf.back());
  }
  return t;
}

std::vector<double> complete_poly_gap(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                                      std::span<const double> r_grid, const SphereQuadrature& quad) {
  check_grid(r_grid);
  if (!P.is_complete()) throw Error(Errc::not_complete, "every coefficient of P must be finite");
  auto N = composed_root_counting(P, f, r_grid, quad);
  std::vector<double> gap;
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    gap.push_back(cartan_characteristic(f, r_grid[k], quad) - N[k] / P.degree());
  }
  return gap;
}

DefectEstimate defect(const HomogeneousPolynomial& P, const ProjectiveMap& f,
                      std::span<const double> r_grid, const SphereQuadrature& quad) {
  check_grid(r_grid);
  require_nondegenerate(P, f, quad);
  const double r_max = r_grid.back();
  double T_lo = cartan_characteristic(f, r_grid.front(), quad);
  double T_hi = cartan_characteristic(f, r_max, quad);
  if (!(T_hi > 0.0) || !(T_hi - T_lo > kDefaultTol * std::max(1.0, std::abs(T_hi)))) {
    throw Error(Errc::bounded_characteristic, "T_f does not grow over the grid");
  }
  DefectEstimate out;
  out.value = kInf;
  for (double r : r_grid) {
    if (r < r_max / 10.0) continue;
    double T = cartan_characteristic(f, r, quad);
    if (!(T > 0.0)) throw Error(Errc::bounded_characteristic, "T_f is not positive on the top decade");
    double ratio = hyper_proximity(P, f, r, quad) / (P.degree() * T);
    out.r.push_back(r);
    out.ratio.push_back(ratio);
    out.value = std::min(out.value, ratio);
  }
  return out;
}

IdentityResidual one_dim_identity_residual(const TropicalRational& f, double a,
                                           std::span<const double> r_grid,
                                           const SphereQuadrature& quad) {
  check_grid(r_grid);
  check_dim(f.dim(), quad.dim);
  IdentityResidual out;
  bool constant = true;
  for (std::size_t i : quad.pair_leaders()) {
    RaySlice s = ray_slice(f, quad.nodes[i], kUnboundedRadius);
    if (!s.breakpoints.empty() || std::abs(s.slopes.front()) > kDefaultTol) constant = false;
  }
  if (constant) {
    out.skipped = true;
    return out;
  }
  const double R = r_grid.back();
  TropicalRational fa = t_add(f, a);
  RadialProfile pf(f, quad, R);
  RadialProfile pfa(fa, quad, R);
  RadialProfile pinv(fa.reciprocal(), quad, R);
  for (double r : r_grid) {
    out.residual.push_back(pf.characteristic(r) - (pinv.counting(r) - pfa.counting(r) + pf.counting(r)));
  }
  return out;
}

}  // namespace tropnev
