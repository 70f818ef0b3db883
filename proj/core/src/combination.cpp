#include "tropnev/combination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tropnev/detail/lp.hpp"

namespace tropnev {

double CombinationBasis::eval(std::span<const double> x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_finite()) best = std::max(best, coeffs[k].value() + basis[k].eval(x));
  }
  return best;
}

namespace {

// True when term k exceeds max over `others` by more than tol somewhere:
// max over pieces p of g_k of the LP  max s  s.t.  s <= c_pq + <d_pq, x>.
bool dominates(const CombinationBasis& comb, std::size_t k, const std::vector<std::size_t>& others,
               double tol) {
  if (others.empty()) return true;
  const std::size_t n = comb.basis[k].dim();
  const double ak = comb.coeffs[k].value();
  for (const auto& p : comb.basis[k].terms()) {
    std::vector<double> cs;
    std::vector<std::vector<double>> ds;
    for (std::size_t j : others) {
      const double aj = comb.coeffs[j].value();
      for (const auto& q : comb.basis[j].terms()) {
        cs.push_back(ak + p.coeff.value() - aj - q.coeff.value());
        std::vector<double> d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = p.expo[c] - q.expo[c];
        ds.push_back(std::move(d));
      }
    }
    const double s0 = *std::min_element(cs.begin(), cs.end());
    if (s0 > tol) return true;  // already dominant at the origin
    // Variables (u, x+, x-) with s = s0 + u and x = x+ - x-; the cap row keeps the LP bounded.
    const double cap = tol + 1.0 - s0;
    std::vector<std::vector<double>> A;
    std::vector<double> b;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::vector<double> row(1 + 2 * n);
      row[0] = 1.0;
      for (std::size_t c = 0; c < n; ++c) {
        row[1 + c] = -ds[i][c];
        row[1 + n + c] = ds[i][c];
      }
      A.push_back(std::move(row));
      b.push_back(cs[i] - s0);
    }
    std::vector<double> cap_row(1 + 2 * n, 0.0);
    cap_row[0] = 1.0;
    A.push_back(std::move(cap_row));
    b.push_back(cap);
    std::vector<double> obj(1 + 2 * n, 0.0);
    obj[0] = 1.0;
    auto res = detail::simplex_max(A, b, obj);
    if (res.status != detail::LpStatus::optimal || s0 + res.value > tol) return true;
  }
  return false;
}

}  // namespace

EssentialTerms essential_terms(const CombinationBasis& comb, const EssentialOptions& opts) {
  if (comb.basis.size() != comb.coeffs.size()) {
    throw Error(Errc::invalid_argument, "one coefficient per basis function");
  }
  std::vector<std::size_t> finite;
  for (std::size_t k = 0; k < comb.coeffs.size(); ++k) {
    if (comb.coeffs[k].is_finite()) finite.push_back(k);
  }
  if (finite.empty()) throw Error(Errc::invalid_argument, "combination has no finite coefficient");
  const std::size_t n = comb.basis.front().dim();
  for (const auto& g : comb.basis) check_dim(n, g.dim());

  std::vector<char> essential(comb.basis.size(), 0);
  auto probe = [&](std::span<const double> x) {
    double first = -std::numeric_limits<double>::infinity(), second = first;
    std::size_t arg = 0;
    for (std::size_t k : finite) {
      double v = comb.coeffs[k].value() + comb.basis[k].eval(x);
      if (v > first) {
        second = first;
        first = v;
        arg = k;
      } else if (v > second) {
        second = v;
      }
    }
    if (first - second > opts.tol * std::max(1.0, std::abs(first))) essential[arg] = 1;
  };
  std::vector<double> x(n, 0.0);
  probe(x);
  std::mt19937_64 gen(opts.seed);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    for (double& c : x) c = opts.radius * (2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0);
    probe(x);
  }

  std::size_t rows = 0;
  for (std::size_t k : finite) rows += comb.basis[k].size();
  const bool lp = n <= opts.max_exact_dim && rows <= opts.max_lp_rows;

  EssentialTerms out;
  if (lp) {
    for (std::size_t k : finite) {
      if (essential[k]) continue;
      std::vector<std::size_t> others;
      for (std::size_t j : finite) {
        if (j != k) others.push_back(j);
      }
      if (dominates(comb, k, others, opts.tol)) essential[k] = 1;
    }
  }
  for (std::size_t k : finite) {
    if (essential[k]) out.indices.push_back(k);
  }
  out.length_min = std::max<std::size_t>(1, out.indices.size());

  if (lp) {
    // Greedy removal of covered non-essential terms gives a valid representation.
    std::vector<std::size_t> kept = finite;
    for (std::size_t k : finite) {
      if (essential[k]) continue;
      std::vector<std::size_t> others;
      for (std::size_t j : kept) {
        if (j != k) others.push_back(j);
      }
      if (!dominates(comb, k, others, opts.tol)) kept = others;
    }
    out.length_max = kept.size();
  } else {
    out.length_max = finite.size();
  }
  out.exact = out.length_min == out.length_max;
  return out;
}

DdgResult ddg(std::span<const CombinationBasis> family, std::size_t order, const EssentialOptions& opts) {
  DdgResult out;
  for (const auto& comb : family) {
    out.members.push_back(essential_terms(comb, opts));
    const auto& e = out.members.back();
    out.min += e.length_max < order;
    out.max += e.length_min < order;
  }
  out.exact = out.min == out.max;
  return out;
}

}  // namespace tropnev
