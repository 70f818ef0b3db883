#pragma once

#include <cstddef>
#include <vector>

namespace tropnev::detail {

enum class LpStatus { optimal, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  double value = 0.0;
  std::vector<double> x;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Dense tableau simplex with Bland's rule.
LpResult simplex_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                     const std::vector<double>& c, std::size_t max_iter = 100000);

}  // namespace tropnev::detail
