#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tropnev/polynomial.hpp"

namespace tropnev {

/// F = max_k (a_k + g_k) over a shared basis g_0..g_M.
struct CombinationBasis {
  std::vector<TropicalPolynomial> basis;
  std::vector<TropicalNumber> coeffs;

  double eval(std::span<const double> x) const;
};

struct EssentialOptions {
  std::size_t samples = 4096;  // random probe points
  double radius = 100.0;       // probe box half-width
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::size_t max_exact_dim = 3;
  std::size_t max_lp_rows = 4000;
};

/// Indices whose term strictly dominates all others somewhere, plus bounds
/// on the shortest representation length l(F).
///
/// Every strictly dominant term belongs to every representation, so
/// indices.size() is a lower bound. In dimension <= max_exact_dim the
/// dominance test is an exact LP over the pieces of the basis, and a greedy
/// pass over the remaining terms yields a valid representation, giving the
/// upper bound; `exact` is set when the bounds meet.
struct EssentialTerms {
  std::vector<std::size_t> indices;
  std::size_t length_min = 0;
  std::size_t length_max = 0;
  bool exact = false;

  std::size_t length() const noexcept { return length_min; }
};

EssentialTerms essential_terms(const CombinationBasis& comb, const EssentialOptions& opts = {});

/// Number of members with l(F) < order, as an interval when some member is
/// not certified.
struct DdgResult {
  std::size_t min = 0;
  std::size_t max = 0;
  bool exact = true;
  std::vector<EssentialTerms> members;
};

DdgResult ddg(std::span<const CombinationBasis> family, std::size_t order,
              const EssentialOptions& opts = {});

}  // namespace tropnev
