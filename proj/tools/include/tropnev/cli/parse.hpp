#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tropnev/error.hpp"
#include "tropnev/matrix.hpp"
#include "tropnev/rational.hpp"

namespace tropnev::cli {

/// Parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Expression grammar:
///
///   expr := poly | poly '/' poly
///   poly := term ('|' term)*        '|' is tropical addition
///   term := coef (':' real (',' real)*)?
///
/// A term is coef + <m, x>; an omitted exponent vector is the zero vector
/// and the dimension comes from the terms that have one. Terms with a -inf
/// coefficient are dropped and reported in `warnings`.
TropicalRational parse_expr(std::string_view src, std::vector<std::string>* warnings = nullptr,
                            std::size_t line = 1);

/// Inverse of parse_expr using shortest round-trip decimals.
std::string print_expr(const TropicalRational& f);
std::string print_poly(const TropicalPolynomial& p);

/// Comma separated reals, e.g. "1,-2.5".
std::vector<double> parse_vector(std::string_view src);

/// JSON array of rows with numbers or "-inf".
TropicalMatrix parse_matrix(std::string_view src);

struct RadiusGrid {
  double lo = 1.0;
  double hi = 100.0;
  std::size_t count = 100;
  bool log = false;

  std::vector<double> points() const;
};

/// "min:max:count[:log]"
RadiusGrid parse_grid(std::string_view src);

}  // namespace tropnev::cli
