#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tropnev/tropical.hpp"

namespace tropnev {

/// Dense row-major matrix over the max-plus semiring.
class TropicalMatrix {
 public:
  TropicalMatrix(std::size_t rows, std::size_t cols, TropicalNumber fill = TropicalNumber::bottom());
  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<TropicalNumber> entries);
  static TropicalMatrix from_rows(const std::vector<std::vector<TropicalNumber>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  TropicalNumber operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  TropicalNumber& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const TropicalNumber> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropicalNumber> entries_;
};

struct Assignment {
  TropicalNumber value;             // bottom when no finite permutation exists
  std::vector<std::size_t> column;  // column[i] = pi(i); empty for bottom
};

/// Maximum-weight perfect assignment (Hungarian method, cubic time).
/// Entries equal to bottom are forbidden edges.
Assignment max_assignment(const TropicalMatrix& a);

/// Tropical determinant |A|_o = max over permutations of sum_i a_{i,pi(i)}.
TropicalNumber trop_det(const TropicalMatrix& a);

/// Row-wise regularity: every row holds at least one finite entry.
bool is_regular(const TropicalMatrix& a);

/// True iff the finite support admits a perfect matching (equivalently trop_det != bottom).
bool has_finite_assignment(const TropicalMatrix& a);

using PointFunction = std::function<double(std::span<const double>)>;

/// Sample-level Gondran-Minoux dependence certificate check: true iff
/// max_{i in I}(a_i + g_i(x)) equals max_{j in J}(a_j + g_j(x)) within tol
/// at every sample. Throws Errc::bad_partition for malformed inputs.
bool verify_gm_dependence(std::span<const PointFunction> g,
                          std::span<const std::size_t> I,
                          std::span<const std::size_t> J,
                          std::span<const TropicalNumber> coeffs,
                          std::span<const std::vector<double>> samples,
                          double tol = kDefaultTol);

}  // namespace tropnev
