#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropnev/matrix.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/polynomial.hpp"

namespace tropnev {

/// Entire functions g_0..g_M together with a shift vector c (or a scale q).
/// Row i, column j of the Casorati matrix is g_i shifted j times, stored as
/// exact symbolic transforms.
class ShiftFamily {
 public:
  /// Additive shifts g_i(x + j c). Throws Errc::dim_mismatch.
  ShiftFamily(std::vector<TropicalPolynomial> base, std::vector<double> c);
  /// Multiplicative shifts g_i(q^j x). Throws Errc::excluded_scale for q in {0, 1}.
  static ShiftFamily q_family(std::vector<TropicalPolynomial> base, double q);

  std::size_t dim() const noexcept { return base_.front().dim(); }
  std::size_t order() const noexcept { return base_.size(); }
  const std::vector<TropicalPolynomial>& base() const noexcept { return base_; }
  bool is_q() const noexcept { return is_q_; }
  const std::vector<double>& shift() const noexcept { return c_; }
  double scale() const noexcept { return q_; }

  /// g_i with j shifts applied.
  const TropicalPolynomial& entry(std::size_t i, std::size_t j) const {
    return entries_[i * base_.size() + j];
  }

  TropicalMatrix matrix(std::span<const double> x) const;

 private:
  ShiftFamily() = default;
  void build();

  std::vector<TropicalPolynomial> base_;
  std::vector<double> c_;
  double q_ = 1.0;
  bool is_q_ = false;
  std::vector<TropicalPolynomial> entries_;
};

/// Tropical Casorati determinant at x via the assignment algorithm.
TropicalNumber casorati_eval(const ShiftFamily& family, std::span<const double> x);

/// The Casorati determinant as a lazily evaluated point function.
PointFunction casorati_function(const ShiftFamily& family);

/// N(r, 1_T (/) C) with C sliced by bisection along the quadrature rays.
/// Throws Errc::budget_exceeded from the slicer.
double casorati_roots_counting(const ShiftFamily& family, double r, const SphereQuadrature& quad,
                               const BlackboxOptions& opts = {});

}  // namespace tropnev
