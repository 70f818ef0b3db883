#include "tropnev/detail/lp.hpp"

#include <cmath>
#include <limits>

namespace tropnev::detail {

LpResult simplex_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                     const std::vector<double>& c, std::size_t max_iter) {
  const std::size_t m = A.size(), n = c.size();
  const std::size_t width = n + m + 1;
  constexpr double eps = 1e-12;

  std::vector<std::vector<double>> T(m + 1, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1.0;
    T[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];

  LpResult res;
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= max_iter) {
      res.status = LpStatus::iteration_limit;
      break;
    }
    // Bland: lowest-index improving column, lowest-index basic variable on ties.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (T[m][j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) {
      res.status = LpStatus::optimal;
      break;
    }
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= eps) continue;
      double ratio = T[i][width - 1] / T[i][enter];
      if (leave == m || ratio < best - eps) {
        best = ratio;
        leave = i;
      } else if (ratio <= best + eps && basis[i] < basis[leave]) {
        leave = i;
      }
    }
    if (leave == m) {
      res.status = LpStatus::unbounded;
      res.value = std::numeric_limits<double>::infinity();
      return res;
    }
    const double piv = T[leave][enter];
    for (double& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0.0) continue;
      const double factor = T[i][enter];
      for (std::size_t j = 0; j < width; ++j) T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }
  res.value = T[m][width - 1];
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) res.x[basis[i]] = T[i][width - 1];
  }
  return res;
}

}  // namespace tropnev::detail
