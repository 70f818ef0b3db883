#include "tropnev/tropical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace tropnev {

TropicalNumber::TropicalNumber(double v) : v_(v) {
  if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
    throw Error(Errc::invalid_argument, "tropical numbers are finite reals or -inf");
  }
}

TropicalNumber t_add(TropicalNumber x, TropicalNumber y) noexcept { return std::max(x, y); }

TropicalNumber t_mul(TropicalNumber x, TropicalNumber y) noexcept {
  if (x.is_bottom() || y.is_bottom()) return TropicalNumber::bottom();
  return TropicalNumber(x.value() + y.value());
}

TropicalNumber t_div(TropicalNumber x, TropicalNumber y) {
  if (y.is_bottom()) throw Error(Errc::bottom_divisor, "division by -inf");
  if (x.is_bottom()) return x;
  return TropicalNumber(x.value() - y.value());
}

TropicalNumber t_pow(TropicalNumber x, double a) {
  if (!std::isfinite(a)) throw Error(Errc::invalid_argument, "exponent must be finite");
  if (x.is_bottom()) {
    if (a < 0) throw Error(Errc::negative_power_of_bottom, "(-inf)^a with a < 0");
    if (a == 0) return TropicalNumber::one();
    return x;
  }
  return TropicalNumber(a * x.value());
}

bool tropical_close(TropicalNumber x, TropicalNumber y, double tol) noexcept {
  if (x.is_bottom() || y.is_bottom()) return x.is_bottom() && y.is_bottom();
  double scale = std::max({1.0, std::abs(x.value()), std::abs(y.value())});
  return std::abs(x.value() - y.value()) <= tol * scale;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  if (x == 0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_tropical(TropicalNumber x) { return format_double(x.value()); }

}  // namespace tropnev
