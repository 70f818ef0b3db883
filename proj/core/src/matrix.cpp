#include "tropnev/matrix.hpp"

#include <algorithm>
#include <limits>

namespace tropnev {

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, TropicalNumber fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw Error(Errc::bad_size, "matrix needs at least one row and column");
}

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<TropicalNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(Errc::bad_size, "matrix needs at least one row and column");
  if (entries_.size() != rows * cols) throw Error(Errc::bad_size, "entry count does not match shape");
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<TropicalNumber>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(Errc::bad_size, "empty matrix");
  std::vector<TropicalNumber> entries;
  std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::bad_size, "ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return TropicalMatrix(rows.size(), cols, std::move(entries));
}

namespace {

void require_square(const TropicalMatrix& a) {
  if (!a.is_square()) throw Error(Errc::not_square, "determinant of a non-square matrix");
}

bool augment(const TropicalMatrix& a, std::size_t i, std::vector<char>& seen,
             std::vector<std::size_t>& match_col) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a(i, j).is_bottom() || seen[j]) continue;
    seen[j] = 1;
    if (match_col[j] == a.rows() || augment(a, match_col[j], seen, match_col)) {
      match_col[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_finite_assignment(const TropicalMatrix& a) {
  require_square(a);
  std::size_t n = a.rows();
  std::vector<std::size_t> match_col(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    if (!augment(a, i, seen, match_col)) return false;
  }
  return true;
}

Assignment max_assignment(const TropicalMatrix& a) {
  require_square(a);
  if (!has_finite_assignment(a)) return {TropicalNumber::bottom(), {}};
  const std::size_t n = a.rows();

  // Minimise cost -a; forbidden cells get a cost no optimal assignment can afford.
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = -cmin;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_bottom()) continue;
      cmin = std::min(cmin, -a(i, j).value());
      cmax = std::max(cmax, -a(i, j).value());
    }
  }
  const double forbidden = cmax + static_cast<double>(n) * (cmax - cmin) + 1.0;
  auto cost = [&](std::size_t i, std::size_t j) {
    return a(i - 1, j - 1).is_bottom() ? forbidden : -a(i - 1, j - 1).value();
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0], j1 = 0;
      double delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.column.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.column[p[j] - 1] = j - 1;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    TropicalNumber e = a(i, out.column[i]);
    if (e.is_bottom()) return {TropicalNumber::bottom(), {}};
    sum += e.value();
  }
  out.value = TropicalNumber(sum);
  return out;
}

TropicalNumber trop_det(const TropicalMatrix& a) { return max_assignment(a).value; }

bool is_regular(const TropicalMatrix& a) {
  require_square(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    if (std::none_of(r.begin(), r.end(), [](TropicalNumber x) { return x.is_finite(); })) return false;
  }
  return true;
}

bool verify_gm_dependence(std::span<const PointFunction> g, std::span<const std::size_t> I,
                          std::span<const std::size_t> J, std::span<const TropicalNumber> coeffs,
                          std::span<const std::vector<double>> samples, double tol) {
  const std::size_t k = g.size();
  if (coeffs.size() != k) throw Error(Errc::bad_partition, "one coefficient per function");
  if (I.empty() || J.empty()) throw Error(Errc::bad_partition, "both index sets must be nonempty");
  std::vector<int> owner(k, 0);
  for (auto i : I) {
    if (i >= k || owner[i]) throw Error(Errc::bad_partition, "index out of range or repeated");
    owner[i] = 1;
  }
  for (auto j : J) {
    if (j >= k || owner[j]) throw Error(Errc::bad_partition, "index sets overlap or out of range");
    owner[j] = 2;
  }
  if (std::find(owner.begin(), owner.end(), 0) != owner.end()) {
    throw Error(Errc::bad_partition, "index sets do not cover every function");
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](TropicalNumber c) { return c.is_bottom(); })) {
    throw Error(Errc::bad_partition, "all coefficients are -inf");
  }

  auto side = [&](std::span<const std::size_t> idx, std::span<const double> x) {
    TropicalNumber best = TropicalNumber::bottom();
    for (auto i : idx) {
      if (coeffs[i].is_bottom()) continue;
      best = t_add(best, TropicalNumber(coeffs[i].value() + g[i](x)));
    }
    return best;
  };
  for (const auto& x : samples) {
    if (!tropical_close(side(I, x), side(J, x), tol)) return false;
  }
  return true;
}

}  // namespace tropnev
