#include "tropnev/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "tropnev/error.hpp"

namespace tropnev {

std::string_view to_string(QuadratureScheme s) noexcept {
  switch (s) {
    case QuadratureScheme::exact_pair: return "exact-pair";
    case QuadratureScheme::uniform_angle: return "uniform-angle";
    case QuadratureScheme::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

std::vector<std::size_t> SphereQuadrature::pair_leaders() const {
  std::vector<std::size_t> out;
  out.reserve(size() / 2);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i < antipode[i]) out.push_back(i);
  }
  return out;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<double> random_direction(std::size_t n, std::mt19937_64& gen) {
  std::vector<double> v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (std::size_t k = 0; k < n; k += 2) {
      double u1 = 1.0 - unit_uniform(gen);
      double u2 = unit_uniform(gen);
      double rad = std::sqrt(-2.0 * std::log(u1));
      v[k] = rad * std::cos(2.0 * std::numbers::pi * u2);
      if (k + 1 < n) v[k + 1] = rad * std::sin(2.0 * std::numbers::pi * u2);
    }
    for (double c : v) norm2 += c * c;
  } while (norm2 < 1e-24);
  double inv = 1.0 / std::sqrt(norm2);
  for (double& c : v) c *= inv;
  return v;
}

}  // namespace

SphereQuadrature make_quadrature(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::bad_size, "dimension must be at least 1");
  if (size < 2 || size % 2 != 0) throw Error(Errc::bad_size, "node count must be even and >= 2");

  SphereQuadrature q;
  q.dim = n;
  q.seed = seed;
  if (n == 1) {
    q.scheme = QuadratureScheme::exact_pair;
    q.nodes = {{1.0}, {-1.0}};
    q.weights = {0.5, 0.5};
    q.antipode = {1, 0};
    return q;
  }

  q.nodes.resize(size);
  q.antipode.resize(size);
  q.weights.assign(size, 1.0 / static_cast<double>(size));
  if (n == 2) {
    q.scheme = QuadratureScheme::uniform_angle;
    const std::size_t half = size / 2;
    for (std::size_t k = 0; k < half; ++k) {
      std::vector<double> v;
      if ((4 * k) % size == 0) {
        // Axis directions are stored exactly.
        std::size_t quarter = 4 * k / size;
        v = quarter == 0 ? std::vector<double>{1.0, 0.0} : std::vector<double>{0.0, 1.0};
      } else {
        double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size);
        v = {std::cos(phi), std::sin(phi)};
      }
      q.nodes[k + half] = {-v[0], -v[1]};
      q.nodes[k] = std::move(v);
      q.antipode[k] = k + half;
      q.antipode[k + half] = k;
    }
    return q;
  }

  q.scheme = QuadratureScheme::monte_carlo;
  std::mt19937_64 gen(seed);
  for (std::size_t k = 0; k < size; k += 2) {
    auto v = random_direction(n, gen);
    std::vector<double> w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = -v[c];
    q.nodes[k] = std::move(v);
    q.nodes[k + 1] = std::move(w);
    q.antipode[k] = k + 1;
    q.antipode[k + 1] = k;
  }
  return q;
}

SphereQuadrature default_quadrature(std::size_t n) {
  return make_quadrature(n, kDefaultQuadratureSize, 0);
}

double omega_n(std::size_t n) {
  if (n < 1) throw Error(Errc::bad_size, "dimension must be at least 1");
  double h = static_cast<double>(n) / 2.0;
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

}  // namespace tropnev
