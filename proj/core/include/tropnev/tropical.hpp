#pragma once

#include <compare>
#include <limits>
#include <string>

#include "tropnev/error.hpp"

namespace tropnev {

/// Shared equality tolerance for "maximum attained twice" decisions and for
/// separating genuine breakpoints from rounding noise.
inline constexpr double kDefaultTol = 1e-9;

/// Element of the max-plus semiring T = R u {-inf}.
///
/// Bottom (0_T = -inf) is stored as IEEE negative infinity and is never
/// confused with a finite value; +inf and NaN are rejected at construction.
class TropicalNumber {
 public:
  constexpr TropicalNumber() noexcept = default;  // 1_T
  TropicalNumber(double v);                       // NOLINT(google-explicit-constructor)

  static constexpr TropicalNumber bottom() noexcept {
    TropicalNumber t;
    t.v_ = -std::numeric_limits<double>::infinity();
    return t;
  }
  static constexpr TropicalNumber one() noexcept { return TropicalNumber{}; }

  constexpr bool is_bottom() const noexcept { return v_ == -std::numeric_limits<double>::infinity(); }
  constexpr bool is_finite() const noexcept { return !is_bottom(); }
  constexpr double value() const noexcept { return v_; }

  friend constexpr bool operator==(TropicalNumber a, TropicalNumber b) noexcept { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(TropicalNumber a, TropicalNumber b) noexcept { return a.v_ <=> b.v_; }

 private:
  double v_ = 0.0;
};

/// x (+) y = max(x, y)
TropicalNumber t_add(TropicalNumber x, TropicalNumber y) noexcept;
/// x (x) y = x + y, bottom absorbing
TropicalNumber t_mul(TropicalNumber x, TropicalNumber y) noexcept;
/// x (/) y = x - y; throws Errc::bottom_divisor when y is bottom
TropicalNumber t_div(TropicalNumber x, TropicalNumber y);
/// x^(a) = a*x; throws Errc::negative_power_of_bottom for bottom with a < 0
TropicalNumber t_pow(TropicalNumber x, double a);

/// True when |x - y| <= tol * max(1, |x|, |y|), with bottom equal only to bottom.
bool tropical_close(TropicalNumber x, TropicalNumber y, double tol = kDefaultTol) noexcept;

/// "-inf" for bottom, shortest round-trip decimal otherwise.
std::string format_tropical(TropicalNumber x);
std::string format_double(double x);

}  // namespace tropnev
