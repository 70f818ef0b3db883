#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "tropnev/polynomial.hpp"
#include "tropnev/quadrature.hpp"

namespace tropnev {

/// Tropical meromorphic function with finitely many terms:
/// f(x) = num(x) - den(x). An entire function has den == 1_T.
class TropicalRational {
 public:
  explicit TropicalRational(TropicalPolynomial num);
  TropicalRational(TropicalPolynomial num, TropicalPolynomial den);

  static TropicalRational constant(std::size_t dim, double c);

  std::size_t dim() const noexcept { return num_.dim(); }
  const TropicalPolynomial& num() const noexcept { return num_; }
  const TropicalPolynomial& den() const noexcept { return den_; }
  bool is_entire() const noexcept;

  double eval(std::span<const double> x) const { return num_.eval(x) - den_.eval(x); }
  double operator()(std::span<const double> x) const { return eval(x); }

  double dir_deriv_plus(std::span<const double> x, std::span<const double> phi,
                        double tol = kDefaultTol) const;
  /// J_f(x; phi) = d+_phi f(x) + d+_{-phi} f(x); symmetric in phi.
  double jump(std::span<const double> x, std::span<const double> phi,
              double tol = kDefaultTol) const;

  /// 1_T (/) f
  TropicalRational reciprocal() const { return TropicalRational(den_, num_); }
  /// f(x + c), exact coefficient transform.
  TropicalRational shifted(std::span<const double> c) const;
  /// f(q x); throws Errc::zero_q for q == 0.
  TropicalRational q_scaled(double q) const;
  /// alpha * f for alpha > 0.
  TropicalRational scaled(double alpha) const;

 private:
  TropicalPolynomial num_;
  TropicalPolynomial den_;
};

/// f (+) g = (num_f den_g (+) num_g den_f) / (den_f den_g)
TropicalRational t_add(const TropicalRational& f, const TropicalRational& g);
/// f (+) a = (num (+) a den) / den
TropicalRational t_add(const TropicalRational& f, double a);
/// f (x) g
TropicalRational t_mul(const TropicalRational& f, const TropicalRational& g);
/// f (/) g
TropicalRational t_div(const TropicalRational& f, const TropicalRational& g);

double eval_poly(const TropicalPolynomial& p, std::span<const double> x);
double eval_rational(const TropicalRational& f, std::span<const double> x);
double dir_deriv_plus(const TropicalRational& f, std::span<const double> x,
                      std::span<const double> phi, double tol = kDefaultTol);
double jump_J(const TropicalRational& f, std::span<const double> x,
              std::span<const double> phi, double tol = kDefaultTol);
TropicalRational shift(const TropicalRational& f, std::span<const double> c);
TropicalRational q_scale(const TropicalRational& f, double q);

enum class PointKind { smooth, root, pole };

std::string_view to_string(PointKind k) noexcept;

struct PointClass {
  PointKind kind = PointKind::smooth;
  double multiplicity = 0.0;
};

/// Smooth / root / pole classification with multiplicity. Sign detection
/// uses the quadrature nodes plus the coordinate axes and diagonals; the
/// multiplicity is the quadrature average of |J| over nodes with J < 0
/// (pole) or J > 0 (root). Pole takes precedence when signs are mixed.
PointClass classify_point(const TropicalRational& f, std::span<const double> x,
                          const SphereQuadrature& quad, double tol = kDefaultTol);

}  // namespace tropnev
