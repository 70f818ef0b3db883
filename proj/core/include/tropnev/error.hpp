#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropnev {

enum class Errc {
  bottom_divisor,
  negative_power_of_bottom,
  not_square,
  bad_partition,
  dim_mismatch,
  zero_q,
  excluded_scale,
  budget_exceeded,
  bad_size,
  degenerate_grid,
  degenerate_map,
  not_complete,
  bounded_characteristic,
  arity_mismatch,
  too_few_hypersurfaces,
  term_limit,
  invalid_argument,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tropnev
