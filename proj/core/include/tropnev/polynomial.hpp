#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropnev/tropical.hpp"

namespace tropnev {

using Point = std::vector<double>;

/// coeff (x) x^(expo), i.e. the affine function coeff + <expo, x>.
struct Monomial {
  TropicalNumber coeff;
  std::vector<double> expo;

  double eval(std::span<const double> x) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline constexpr std::size_t kDefaultTermLimit = 100000;

/// Finite max-plus polynomial on R^n: P(x) = max_i (a_i + <m_i, x>).
///
/// Construction drops bottom coefficients, merges equal exponent vectors
/// keeping the larger coefficient, and sorts terms by exponent; at least
/// one finite term must remain, so P is finite everywhere.
class TropicalPolynomial {
 public:
  TropicalPolynomial(std::size_t dim, std::vector<Monomial> terms);

  static TropicalPolynomial constant(std::size_t dim, double c);
  static TropicalPolynomial unit(std::size_t dim) { return constant(dim, 0.0); }
  /// x_k as a polynomial (coefficient 0, exponent e_k).
  static TropicalPolynomial coordinate(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  double eval(std::span<const double> x) const;

  /// Right derivative along phi: max of <m_i, phi> over terms active at x.
  double dir_deriv_plus(std::span<const double> x, std::span<const double> phi,
                        double tol = kDefaultTol) const;

  /// Exactly one term with zero exponent.
  bool is_constant() const noexcept;

  /// P(x + c): coefficients become a_i + <m_i, c>.
  TropicalPolynomial shifted(std::span<const double> c) const;
  /// P(q x): exponents become q m_i. Throws Errc::zero_q for q == 0.
  TropicalPolynomial q_scaled(double q) const;
  /// alpha * P for alpha > 0 (= P^(alpha)).
  TropicalPolynomial scaled(double alpha) const;
  /// c (x) P.
  TropicalPolynomial times_constant(double c) const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::size_t dim_;
  std::vector<Monomial> terms_;
};

/// P (+) Q
TropicalPolynomial t_add(const TropicalPolynomial& p, const TropicalPolynomial& q);
/// P (x) Q (Minkowski sum of exponents); throws Errc::term_limit past `limit` raw terms.
TropicalPolynomial t_mul(const TropicalPolynomial& p, const TropicalPolynomial& q,
                         std::size_t limit = kDefaultTermLimit);
/// P^(k) for a nonnegative integer k by repeated squaring.
TropicalPolynomial t_pow(const TropicalPolynomial& p, unsigned k,
                         std::size_t limit = kDefaultTermLimit);

void check_dim(std::size_t expected, std::size_t actual);

}  // namespace tropnev
