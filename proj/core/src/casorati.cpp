#include "tropnev/casorati.hpp"

#include <cmath>
#include <memory>

namespace tropnev {

ShiftFamily::ShiftFamily(std::vector<TropicalPolynomial> base, std::vector<double> c)
    : base_(std::move(base)), c_(std::move(c)) {
  if (base_.empty()) throw Error(Errc::bad_size, "shift family needs at least one function");
  for (const auto& g : base_) check_dim(base_.front().dim(), g.dim());
  check_dim(base_.front().dim(), c_.size());
  build();
}

ShiftFamily ShiftFamily::q_family(std::vector<TropicalPolynomial> base, double q) {
  if (q == 0.0 || q == 1.0 || !std::isfinite(q)) {
    throw Error(Errc::excluded_scale, "q-shifts need a scale outside {0, 1}");
  }
  if (base.empty()) throw Error(Errc::bad_size, "shift family needs at least one function");
  for (const auto& g : base) check_dim(base.front().dim(), g.dim());
  ShiftFamily f;
  f.base_ = std::move(base);
  f.q_ = q;
  f.is_q_ = true;
  f.build();
  return f;
}

void ShiftFamily::build() {
  const std::size_t k = base_.size();
  entries_.clear();
  entries_.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (is_q_) {
        entries_.push_back(base_[i].q_scaled(std::pow(q_, static_cast<double>(j))));
      } else {
        std::vector<double> jc = c_;
        for (double& v : jc) v *= static_cast<double>(j);
        entries_.push_back(base_[i].shifted(jc));
      }
    }
  }
}

TropicalMatrix ShiftFamily::matrix(std::span<const double> x) const {
  check_dim(dim(), x.size());
  const std::size_t k = order();
  TropicalMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = TropicalNumber(entry(i, j).eval(x));
  }
  return a;
}

TropicalNumber casorati_eval(const ShiftFamily& family, std::span<const double> x) {
  return trop_det(family.matrix(x));
}

PointFunction casorati_function(const ShiftFamily& family) {
  auto fam = std::make_shared<const ShiftFamily>(family);
  return [fam](std::span<const double> x) { return casorati_eval(*fam, x).value(); };
}

double casorati_roots_counting(const ShiftFamily& family, double r, const SphereQuadrature& quad,
                               const BlackboxOptions& opts) {
  check_dim(family.dim(), quad.dim);
  return RadialProfile(casorati_function(family), quad, r, opts).negated().counting(r);
}

}  // namespace tropnev
