#include "tropnev/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tropnev {

namespace {

std::vector<double> scaled_node(std::span<const double> node, double r) {
  std::vector<double> x(node.begin(), node.end());
  for (double& c : x) c *= r;
  return x;
}

void check_grid(std::span<const double> r_grid) {
  if (r_grid.empty()) throw Error(Errc::invalid_argument, "empty radius grid");
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    if (!(r_grid[k] > 0.0) || !std::isfinite(r_grid[k]) || (k > 0 && !(r_grid[k] > r_grid[k - 1]))) {
      throw Error(Errc::invalid_argument, "radius grid must be positive and strictly increasing");
    }
  }
}

}  // namespace

RadialProfile::RadialProfile(const TropicalRational& f, SphereQuadrature quad, double R, double tol)
    : quad_(std::move(quad)), R_(R) {
  check_dim(f.dim(), quad_.dim);
  if (!(R > 0.0)) throw Error(Errc::invalid_argument, "profile radius must be positive");
  eval_ = [f](std::span<const double> x) { return f.eval(x); };
  origin_value_ = f.eval(std::vector<double>(f.dim(), 0.0));
  slices_.resize(quad_.size());
  for (std::size_t i : quad_.pair_leaders()) {
    slices_[i] = ray_slice(f, quad_.nodes[i], R, tol);
    slices_[quad_.antipode[i]] = mirrored(slices_[i]);
  }
}

RadialProfile::RadialProfile(PointFunction g, SphereQuadrature quad, double R,
                             const BlackboxOptions& opts)
    : eval_(std::move(g)), quad_(std::move(quad)), R_(R) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw Error(Errc::invalid_argument, "blackbox profiles need a finite positive radius");
  }
  origin_value_ = eval_(std::vector<double>(quad_.dim, 0.0));
  slices_.resize(quad_.size());
  for (std::size_t i : quad_.pair_leaders()) {
    const auto& node = quad_.nodes[i];
    std::vector<double> x(node.size());
    auto along = [&](double t) {
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = t * node[k];
      return eval_(x);
    };
    slices_[i] = blackbox_slice(along, -R, R, opts);
    slices_[i].direction = node;
    slices_[quad_.antipode[i]] = mirrored(slices_[i]);
  }
}

RadialProfile RadialProfile::negated() const {
  RadialProfile p = *this;
  p.negate_ = !negate_;
  p.origin_value_ = -origin_value_;
  for (auto& s : p.slices_) s = tropnev::negated(s);
  return p;
}

void RadialProfile::check_radius(double r) const {
  if (!(r > 0.0) || r > R_) {
    throw Error(Errc::invalid_argument, "radius must lie in (0, " + format_double(R_) + "]");
  }
}

double RadialProfile::mean_value(double r) const {
  check_radius(r);
  double acc = 0.0;
  for (std::size_t i = 0; i < quad_.size(); ++i) {
    double v = eval_(scaled_node(quad_.nodes[i], r));
    acc += quad_.weights[i] * (negate_ ? -v : v);
  }
  return acc;
}

double RadialProfile::proximity(double r) const {
  check_radius(r);
  double acc = 0.0;
  for (std::size_t i = 0; i < quad_.size(); ++i) {
    double v = eval_(scaled_node(quad_.nodes[i], r));
    acc += quad_.weights[i] * std::max(negate_ ? -v : v, 0.0);
  }
  return acc;
}

double RadialProfile::counting_density(double t) const {
  check_radius(t);
  double acc = 0.0;
  for (std::size_t i = 0; i < quad_.size(); ++i) acc += quad_.weights[i] * slice_pole_mass(slices_[i], t);
  return acc;
}

double RadialProfile::counting(double r) const {
  check_radius(r);
  double acc = 0.0;
  for (std::size_t i = 0; i < quad_.size(); ++i) acc += quad_.weights[i] * slice_counting(slices_[i], r);
  return acc;
}

double RadialProfile::characteristic(double r) const { return proximity(r) + counting(r); }

double proximity(const TropicalRational& f, double r, const SphereQuadrature& quad) {
  return RadialProfile(f, quad, r).proximity(r);
}

double counting_density(const TropicalRational& f, double t, const SphereQuadrature& quad) {
  return RadialProfile(f, quad, t).counting_density(t);
}

double counting(const TropicalRational& f, double r, const SphereQuadrature& quad) {
  return RadialProfile(f, quad, r).counting(r);
}

double characteristic(const TropicalRational& f, double r, const SphereQuadrature& quad) {
  return RadialProfile(f, quad, r).characteristic(r);
}

CharTable char_table(const TropicalRational& f, std::span<const double> r_grid,
                     const SphereQuadrature& quad) {
  check_grid(r_grid);
  RadialProfile prof(f, quad, r_grid.back());
  CharTable t;
  t.scheme = quad.scheme;
  t.K = quad.size();
  t.seed = quad.seed;
  for (double r : r_grid) {
    t.r.push_back(r);
    t.m.push_back(prof.proximity(r));
    t.n.push_back(prof.counting_density(r));
    t.N.push_back(prof.counting(r));
    t.T.push_back(t.m.back() + t.N.back());
  }
  return t;
}

double jensen_residual(const TropicalRational& f, double r, const SphereQuadrature& quad) {
  RadialProfile prof(f, quad, r);
  return prof.characteristic(r) - prof.negated().characteristic(r) - prof.value_at_origin();
}

double pole_infimum(const TropicalRational& f, const SphereQuadrature& quad, double tol) {
  check_dim(f.dim(), quad.dim);
  double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i : quad.pair_leaders()) {
    RaySlice s = ray_slice(f, quad.nodes[i], kUnboundedRadius, tol);
    for (const auto& b : s.breakpoints) {
      if (b.jump < 0.0) inf = std::min(inf, f.eval(scaled_node(quad.nodes[i], b.t)));
    }
  }
  return inf;
}

FmtGap fmt_gap(const TropicalRational& f, double a, std::span<const double> r_grid,
               const SphereQuadrature& quad) {
  check_grid(r_grid);
  TropicalRational g = t_add(f, a).reciprocal();
  RadialProfile pf(f, quad, r_grid.back());
  RadialProfile pg(g, quad, r_grid.back());
  FmtGap out;
  for (double r : r_grid) out.gap.push_back(pg.characteristic(r) - pf.characteristic(r));
  out.L_f = pole_infimum(f, quad);
  out.above_lf = a >= out.L_f;
  return out;
}

TropicalRational shift_quotient(const TropicalRational& f, std::span<const double> c) {
  TropicalRational s = f.shifted(c);
  return TropicalRational(t_mul(s.num(), f.den()), t_mul(s.den(), f.num()));
}

TropicalRational q_quotient(const TropicalRational& f, double q) {
  TropicalRational s = f.q_scaled(q);
  return TropicalRational(t_mul(s.num(), f.den()), t_mul(s.den(), f.num()));
}

double log_diff_proximity(const TropicalRational& f, std::span<const double> c, double r,
                          const SphereQuadrature& quad) {
  return proximity(shift_quotient(f, c), r, quad);
}

double q_log_diff_proximity(const TropicalRational& f, double q, double r,
                            const SphereQuadrature& quad) {
  return proximity(q_quotient(f, q), r, quad);
}

double ldl_bound(const TropicalRational& f, std::span<const double> c, double r, double alpha,
                 const SphereQuadrature& quad) {
  check_dim(f.dim(), c.size());
  if (!(alpha > 1.0)) throw Error(Errc::invalid_argument, "alpha must exceed 1");
  double cn = 0.0;
  for (double v : c) cn += v * v;
  cn = std::sqrt(cn);
  double big = alpha * (r + cn);
  double f0 = f.eval(std::vector<double>(f.dim(), 0.0));
  return 16.0 * cn / (r + cn) / (alpha - 1.0) * characteristic(f, big, quad) + std::abs(f0) / 2.0;
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace

GrowthEstimate estimate_growth(std::span<const double> r, std::span<const double> T) {
  if (r.size() != T.size()) throw Error(Errc::invalid_argument, "grid and values differ in length");
  check_grid(r);
  if (r.back() / r.front() < 1000.0) {
    throw Error(Errc::degenerate_grid, "growth estimates need a grid spanning three decades");
  }
  std::vector<double> lr, lt, lr2, llt;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] < r.back() / 10.0) continue;
    if (T[k] > 0.0) {
      lr.push_back(std::log(r[k]));
      lt.push_back(std::log(T[k]));
    }
    if (T[k] > 1.0) {
      lr2.push_back(std::log(r[k]));
      llt.push_back(std::log(std::log(T[k])));
    }
  }
  std::size_t top = 0;
  for (double v : r) top += v >= r.back() / 10.0;
  if (top < 2) throw Error(Errc::degenerate_grid, "need at least two radii in the top decade");

  GrowthEstimate g;
  g.rho = lt.size() >= 2 ? ls_slope(lr, lt) : 0.0;
  g.rho2 = llt.size() >= 2 ? ls_slope(lr2, llt) : 0.0;
  g.subnormal = T.back() <= 0.0 || std::log(T.back()) / r.back() < 0.01;
  return g;
}

GrowthEstimate growth_estimate(const TropicalRational& f, std::span<const double> r_grid,
                               const SphereQuadrature& quad) {
  check_grid(r_grid);
  RadialProfile prof(f, quad, r_grid.back());
  std::vector<double> T;
  for (double r : r_grid) T.push_back(prof.characteristic(r));
  return estimate_growth(r_grid, T);
}

double value_defect(const TropicalRational& f, double a, std::span<const double> r_grid,
                    const SphereQuadrature& quad) {
  check_grid(r_grid);
  RadialProfile pf(f, quad, r_grid.back());
  RadialProfile pg(t_add(f, a).reciprocal(), quad, r_grid.back());
  double best = std::numeric_limits<double>::infinity();
  for (double r : r_grid) {
    if (r < r_grid.back() / 10.0) continue;
    double T = pf.characteristic(r);
    if (!(T > 0.0)) throw Error(Errc::bounded_characteristic, "T(r, f) is not positive on the top decade");
    best = std::min(best, 1.0 - pg.counting(r) / T);
  }
  return best;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (count == 0) throw Error(Errc::bad_size, "grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> g(count);
  for (std::size_t k = 0; k < count; ++k) {
    g[k] = k + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw Error(Errc::invalid_argument, "log grid needs positive ends");
  if (count == 0) throw Error(Errc::bad_size, "grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> g(count);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t k = 0; k < count; ++k) {
    g[k] = k == 0 ? lo : k + 1 == count ? hi
                       : std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  return g;
}

}  // namespace tropnev
