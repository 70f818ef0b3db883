#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "tropnev/polynomial.hpp"
#include "tropnev/rational.hpp"

namespace tropnev {

struct Breakpoint {
  double t;
  double jump;  // right slope minus left slope, never below tol in magnitude
};

/// One-variable restriction t -> f(t * direction) on the open interval (lo, hi).
/// slopes[k] holds the slope between breakpoints k-1 and k, so
/// slopes.size() == breakpoints.size() + 1.
struct RaySlice {
  std::vector<double> direction;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Breakpoint> breakpoints;
  std::vector<double> slopes;
  double value_at_0 = 0.0;

  double radius() const noexcept { return hi; }
};

/// Line a + s t of a restricted monomial.
struct Line {
  double slope;
  double intercept;
};

/// Breakpoints of t -> max_i (intercept_i + slope_i t) over all of R, in
/// increasing t, together with the slope of the leftmost piece.
struct Envelope {
  std::vector<Breakpoint> breakpoints;
  double leftmost_slope = 0.0;
};

Envelope upper_envelope(std::vector<Line> lines);

inline constexpr double kUnboundedRadius = std::numeric_limits<double>::infinity();

/// Exact breakpoints of t -> f(t theta) on (-R, R); R may be kUnboundedRadius.
/// Numerator and denominator envelopes are merged; jumps with |J| < tol are dropped.
RaySlice ray_slice(const TropicalRational& f, std::span<const double> theta, double R,
                   double tol = kDefaultTol);
RaySlice ray_slice(const TropicalPolynomial& p, std::span<const double> theta, double R,
                   double tol = kDefaultTol);

struct BlackboxOptions {
  double tol = kDefaultTol;
  std::size_t initial_cells = 64;
  double min_width_fraction = 1e-12;  // terminal width relative to the interval
  std::size_t max_evaluations = 2'000'000;
};

/// Recovers breakpoints of a continuous piecewise-linear g on [lo, hi] by
/// recursive bisection: cells whose midpoint and quarter points sit on the
/// chord are linear, others are split down to the terminal width. Collinear
/// neighbours are merged and each slope change is placed at the intersection
/// of the adjacent lines; a short segment between two lines is dropped when g
/// at their intersection agrees with them. Exact for convex or concave g, and for any g whose
/// breakpoints are farther apart than the terminal width.
/// Throws Errc::budget_exceeded past max_evaluations calls to g.
RaySlice blackbox_slice(const std::function<double(double)>& g, double lo, double hi,
                        const BlackboxOptions& opts = {});

/// Slice of t -> g(-t) (the antipodal ray).
RaySlice mirrored(const RaySlice& s);
/// Slice of -g.
RaySlice negated(const RaySlice& s);

/// Sum of |J| over breakpoints with |t| < t_max and J < 0.
double slice_pole_mass(const RaySlice& s, double t_max);
/// (1/2) sum of |J| (r - |t|) over breakpoints with |t| < r and J < 0.
double slice_counting(const RaySlice& s, double r);

/// Value of the sliced function at t, integrated from value_at_0.
double slice_value(const RaySlice& s, double t);

}  // namespace tropnev
