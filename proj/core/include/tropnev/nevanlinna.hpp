#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropnev/matrix.hpp"
#include "tropnev/quadrature.hpp"
#include "tropnev/rational.hpp"
#include "tropnev/slice.hpp"

namespace tropnev {

/// Ray slices of a function at every quadrature node on (-R, R), computed
/// once per antipodal pair. All functionals below are quadrature averages of
/// the one-variable quantities on these slices, reduced in node order.
class RadialProfile {
 public:
  RadialProfile(const TropicalRational& f, SphereQuadrature quad, double R,
                double tol = kDefaultTol);
  /// Profile of a lazily evaluated piecewise-linear function (sliced by bisection).
  RadialProfile(PointFunction g, SphereQuadrature quad, double R, const BlackboxOptions& opts = {});

  const SphereQuadrature& quadrature() const noexcept { return quad_; }
  const std::vector<RaySlice>& slices() const noexcept { return slices_; }
  double max_radius() const noexcept { return R_; }

  /// Profile of -g (roots become poles); reuses the slices.
  RadialProfile negated() const;

  double value_at_origin() const noexcept { return origin_value_; }
  /// (1/omega_n) int g(r theta) dsigma
  double mean_value(double r) const;
  /// m(r, g)
  double proximity(double r) const;
  /// n(t, g)
  double counting_density(double t) const;
  /// N(r, g) via the per-direction closed form (1/2) sum |J| (r - |t|).
  double counting(double r) const;
  /// T(r, g) = m + N
  double characteristic(double r) const;

 private:
  RadialProfile() = default;
  void check_radius(double r) const;

  PointFunction eval_;
  bool negate_ = false;
  SphereQuadrature quad_;
  double R_ = 0.0;
  double origin_value_ = 0.0;
  std::vector<RaySlice> slices_;
};

double proximity(const TropicalRational& f, double r, const SphereQuadrature& quad);
double counting_density(const TropicalRational& f, double t, const SphereQuadrature& quad);
double counting(const TropicalRational& f, double r, const SphereQuadrature& quad);
double characteristic(const TropicalRational& f, double r, const SphereQuadrature& quad);

struct CharTable {
  std::vector<double> r;
  std::vector<double> m;
  std::vector<double> n;
  std::vector<double> N;
  std::vector<double> T;
  QuadratureScheme scheme = QuadratureScheme::exact_pair;
  std::size_t K = 0;
  std::uint64_t seed = 0;
};

/// Throws Errc::invalid_argument unless the grid is positive and strictly increasing.
CharTable char_table(const TropicalRational& f, std::span<const double> r_grid,
                     const SphereQuadrature& quad);

/// T(r, f) - T(r, 1_T (/) f) - f(0); zero up to rounding.
double jensen_residual(const TropicalRational& f, double r, const SphereQuadrature& quad);

/// inf { f(b) : b a pole } over the full lines through the quadrature nodes;
/// +inf when no pole is found.
double pole_infimum(const TropicalRational& f, const SphereQuadrature& quad,
                    double tol = kDefaultTol);

struct FmtGap {
  std::vector<double> gap;  // T(r, 1_T (/) (f (+) a)) - T(r, f)
  double L_f = 0.0;
  bool above_lf = false;  // warning: a >= L_f, the boundedness contract does not apply
};

FmtGap fmt_gap(const TropicalRational& f, double a, std::span<const double> r_grid,
               const SphereQuadrature& quad);

/// f(x + c) (/) f(x) as a single rational.
TropicalRational shift_quotient(const TropicalRational& f, std::span<const double> c);
/// f(q x) (/) f(x) as a single rational.
TropicalRational q_quotient(const TropicalRational& f, double q);

/// m(r, f(x + c) (/) f(x))
double log_diff_proximity(const TropicalRational& f, std::span<const double> c, double r,
                          const SphereQuadrature& quad);
/// m(r, f(q x) (/) f(x))
double q_log_diff_proximity(const TropicalRational& f, double q, double r,
                            const SphereQuadrature& quad);

/// One-variable bound 16|c|/(r+|c|) * 1/(alpha-1) * T(alpha (r+|c|), f) + |f(0)|/2.
double ldl_bound(const TropicalRational& f, std::span<const double> c, double r, double alpha,
                 const SphereQuadrature& quad);

struct GrowthEstimate {
  double rho = 0.0;    // slope of log T against log r over the top decade
  double rho2 = 0.0;   // slope of log log T against log r over the top decade
  bool subnormal = false;  // log T(r_max) / r_max < 0.01
};

/// Finite-grid estimates only; they certify nothing about the limsup.
/// Throws Errc::degenerate_grid unless r_max / r_min >= 1000.
GrowthEstimate estimate_growth(std::span<const double> r, std::span<const double> T);
GrowthEstimate growth_estimate(const TropicalRational& f, std::span<const double> r_grid,
                               const SphereQuadrature& quad);

/// Grid-liminf of 1 - N(r, 1_T (/) (f (+) a)) / T(r, f) over the top decade.
double value_defect(const TropicalRational& f, double a, std::span<const double> r_grid,
                    const SphereQuadrature& quad);

std::vector<double> linear_grid(double lo, double hi, std::size_t count);
std::vector<double> log_grid(double lo, double hi, std::size_t count);

}  // namespace tropnev
