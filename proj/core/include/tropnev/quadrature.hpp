#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tropnev {

enum class QuadratureScheme { exact_pair, uniform_angle, monte_carlo };

std::string_view to_string(QuadratureScheme s) noexcept;

/// Equal-weight rule on the unit sphere S^{n-1} approximating the normalized
/// surface average (1/omega_n) * integral over the sphere.
///
/// Nodes always come in antipodal pairs: antipode(i) is the index of -node(i).
/// Consumers reduce over nodes in index order, so every sum is reproducible
/// for a given (dim, size, seed).
struct SphereQuadrature {
  std::size_t dim = 1;
  QuadratureScheme scheme = QuadratureScheme::exact_pair;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
  std::vector<std::size_t> antipode;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Representative index of each antipodal pair (the smaller index).
  std::vector<std::size_t> pair_leaders() const;
};

/// n = 1: exact two-point rule {+1, -1} (size is ignored).
/// n = 2: `size` equally spaced angles starting at 0.
/// n >= 3: size/2 pseudo-random directions from `seed`, each followed by its antipode.
/// Throws Errc::bad_size when n < 1, size < 2 or size is odd.
SphereQuadrature make_quadrature(std::size_t n, std::size_t size, std::uint64_t seed = 0);

inline constexpr std::size_t kDefaultQuadratureSize = 4096;

SphereQuadrature default_quadrature(std::size_t n);

/// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double omega_n(std::size_t n);

}  // namespace tropnev
