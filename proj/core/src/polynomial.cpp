#include "tropnev/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tropnev {

void check_dim(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw Error(Errc::dim_mismatch,
                "expected dimension " + std::to_string(expected) + ", got " + std::to_string(actual));
  }
}

double Monomial::eval(std::span<const double> x) const {
  double s = coeff.value();
  for (std::size_t k = 0; k < expo.size(); ++k) s += expo[k] * x[k];
  return s;
}

TropicalPolynomial::TropicalPolynomial(std::size_t dim, std::vector<Monomial> terms) : dim_(dim) {
  if (dim == 0) throw Error(Errc::bad_size, "polynomials live on R^n with n >= 1");
  for (const auto& t : terms) {
    check_dim(dim, t.expo.size());
    for (double e : t.expo) {
      if (!std::isfinite(e)) throw Error(Errc::invalid_argument, "exponents must be finite");
    }
  }
  std::erase_if(terms, [](const Monomial& t) { return t.coeff.is_bottom(); });
  if (terms.empty()) throw Error(Errc::invalid_argument, "polynomial needs a finite term");
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.expo != b.expo) return a.expo < b.expo;
    return a.coeff > b.coeff;
  });
  // Equal exponents: the sort put the largest coefficient first.
  terms.erase(std::unique(terms.begin(), terms.end(),
                          [](const Monomial& a, const Monomial& b) { return a.expo == b.expo; }),
              terms.end());
  terms_ = std::move(terms);
}

TropicalPolynomial TropicalPolynomial::constant(std::size_t dim, double c) {
  return TropicalPolynomial(dim, {Monomial{TropicalNumber(c), std::vector<double>(dim, 0.0)}});
}

TropicalPolynomial TropicalPolynomial::coordinate(std::size_t dim, std::size_t k) {
  if (k >= dim) throw Error(Errc::dim_mismatch, "coordinate index out of range");
  std::vector<double> e(dim, 0.0);
  e[k] = 1.0;
  return TropicalPolynomial(dim, {Monomial{TropicalNumber::one(), std::move(e)}});
}

double TropicalPolynomial::eval(std::span<const double> x) const {
  check_dim(dim_, x.size());
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) best = std::max(best, t.eval(x));
  return best;
}

double TropicalPolynomial::dir_deriv_plus(std::span<const double> x, std::span<const double> phi,
                                          double tol) const {
  check_dim(dim_, x.size());
  check_dim(dim_, phi.size());
  std::vector<double> vals(terms_.size());
  double vmax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    vals[i] = terms_[i].eval(x);
    vmax = std::max(vmax, vals[i]);
  }
  const double cut = vmax - tol * std::max(1.0, std::abs(vmax));
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (vals[i] < cut) continue;
    double s = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) s += terms_[i].expo[k] * phi[k];
    best = std::max(best, s);
  }
  return best;
}

bool TropicalPolynomial::is_constant() const noexcept {
  return terms_.size() == 1 &&
         std::all_of(terms_[0].expo.begin(), terms_[0].expo.end(), [](double e) { return e == 0.0; });
}

TropicalPolynomial TropicalPolynomial::shifted(std::span<const double> c) const {
  check_dim(dim_, c.size());
  std::vector<Monomial> out = terms_;
  for (auto& t : out) {
    double s = t.coeff.value();
    for (std::size_t k = 0; k < dim_; ++k) s += t.expo[k] * c[k];
    t.coeff = TropicalNumber(s);
  }
  return TropicalPolynomial(dim_, std::move(out));
}

TropicalPolynomial TropicalPolynomial::q_scaled(double q) const {
  if (q == 0.0) throw Error(Errc::zero_q, "q must be nonzero");
  std::vector<Monomial> out = terms_;
  for (auto& t : out) {
    for (double& e : t.expo) e *= q;
  }
  return TropicalPolynomial(dim_, std::move(out));
}

TropicalPolynomial TropicalPolynomial::scaled(double alpha) const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(Errc::invalid_argument, "scale factor must be positive");
  }
  std::vector<Monomial> out = terms_;
  for (auto& t : out) {
    t.coeff = TropicalNumber(alpha * t.coeff.value());
    for (double& e : t.expo) e *= alpha;
  }
  return TropicalPolynomial(dim_, std::move(out));
}

TropicalPolynomial TropicalPolynomial::times_constant(double c) const {
  std::vector<Monomial> out = terms_;
  for (auto& t : out) t.coeff = TropicalNumber(t.coeff.value() + c);
  return TropicalPolynomial(dim_, std::move(out));
}

TropicalPolynomial t_add(const TropicalPolynomial& p, const TropicalPolynomial& q) {
  check_dim(p.dim(), q.dim());
  std::vector<Monomial> terms = p.terms();
  terms.insert(terms.end(), q.terms().begin(), q.terms().end());
  return TropicalPolynomial(p.dim(), std::move(terms));
}

TropicalPolynomial t_mul(const TropicalPolynomial& p, const TropicalPolynomial& q, std::size_t limit) {
  check_dim(p.dim(), q.dim());
  if (p.size() * q.size() > limit) {
    throw Error(Errc::term_limit, "product would have " + std::to_string(p.size() * q.size()) +
                                      " terms (limit " + std::to_string(limit) + ")");
  }
  std::vector<Monomial> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      std::vector<double> e(p.dim());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.expo[k] + b.expo[k];
      terms.push_back({TropicalNumber(a.coeff.value() + b.coeff.value()), std::move(e)});
    }
  }
  return TropicalPolynomial(p.dim(), std::move(terms));
}

TropicalPolynomial t_pow(const TropicalPolynomial& p, unsigned k, std::size_t limit) {
  TropicalPolynomial result = TropicalPolynomial::unit(p.dim());
  TropicalPolynomial base = p;
  while (k > 0) {
    if (k & 1u) result = t_mul(result, base, limit);
    k >>= 1;
    if (k > 0) base = t_mul(base, base, limit);
  }
  return result;
}

}  // namespace tropnev
