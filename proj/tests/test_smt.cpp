#include <algorithm>
#include <cmath>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "tropnev/casorati.hpp"
#include "tropnev/combination.hpp"
#include "tropnev/error.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/smt.hpp"

using namespace tropnev;
using namespace tropnev::testing;

namespace {

const SphereQuadrature kQ1 = make_quadrature(1, 2);

std::vector<double> pt(std::initializer_list<double> v) { return v; }

TropicalPolynomial poly1(std::initializer_list<std::pair<double, double>> terms) {
  std::vector<Monomial> ms;
  for (auto [c, e] : terms) ms.push_back({c, {e}});
  return TropicalPolynomial(1, ms);
}

HomogeneousPolynomial linear_form(std::vector<double> a) {
  std::vector<HomogeneousTerm> terms;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<unsigned> idx(a.size(), 0);
    idx[k] = 1;
    terms.push_back({idx, a[k]});
  }
  return HomogeneousPolynomial(a.size() - 1, 1, terms);
}

// [x (+) 1 : x (+) 0], the map of (x (+) 0) (/) (x (+) 1).
ProjectiveMap example_map() { return ProjectiveMap::from_rational(example_root_pole()); }

std::vector<HomogeneousPolynomial> three_values() {
  return {linear_form({0, 0.25}), linear_form({0, 0.5}), linear_form({0, 0.75})};
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("casorati_eval equals permutation enumeration") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-10, 10);
  for (std::size_t order = 2; order <= 6; ++order) {
    for (int it = 0; it < 20; ++it) {
      std::vector<TropicalPolynomial> base;
      for (std::size_t i = 0; i < order; ++i) base.push_back(random_poly(rng, 2, 3, 2, 3));
      std::vector<double> c{u(rng) / 5, u(rng) / 5};
      ShiftFamily fam(base, c);
      for (int k = 0; k < 100 / static_cast<int>(order); ++k) {
        std::vector<double> x{u(rng), u(rng)};
        // Row i, column j is g_i evaluated at x + j c.
        TropicalMatrix a(order, order);
        for (std::size_t i = 0; i < order; ++i) {
          for (std::size_t j = 0; j < order; ++j) {
            std::vector<double> y{x[0] + j * c[0], x[1] + j * c[1]};
            a(i, j) = base[i].eval(y);
          }
        }
        auto expect = oracle::det_by_enumeration(a);
        CHECK(casorati_eval(fam, x).value() == doctest::Approx(expect.value()).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("q-Casorati entries scale the argument") {
  std::vector<TropicalPolynomial> base{poly1({{0, 1}, {1, 0}}), poly1({{0, 2}, {-1, -1}})};
  auto fam = ShiftFamily::q_family(base, 3.0);
  for (double x : {-2.0, 0.5, 4.0}) {
    TropicalMatrix a(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) a(i, j) = base[i].eval(pt({std::pow(3.0, j) * x}));
    }
    CHECK(casorati_eval(fam, pt({x})) == oracle::det_by_enumeration(a));
  }
  CHECK(code_of([&] { (void)ShiftFamily::q_family(base, 1.0); }) == Errc::excluded_scale);
  CHECK(code_of([&] { (void)ShiftFamily::q_family(base, 0.0); }) == Errc::excluded_scale);
}

TEST_CASE("Casorati determinant is shift covariant") {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int it = 0; it < 10; ++it) {
    std::vector<TropicalPolynomial> base;
    for (int i = 0; i < 3; ++i) base.push_back(random_poly(rng, 2, 3, 2, 3));
    std::vector<double> c{1.0, -0.5}, s{u(rng), u(rng)};
    std::vector<TropicalPolynomial> moved;
    for (const auto& g : base) moved.push_back(g.shifted(s));
    ShiftFamily a(base, c), b(moved, c);
    for (int k = 0; k < 50; ++k) {
      std::vector<double> x{u(rng), u(rng)}, xs{x[0] + s[0], x[1] + s[1]};
      CHECK(casorati_eval(b, x).value() == doctest::Approx(casorati_eval(a, xs).value()).epsilon(1e-12));
    }
  }
}

TEST_CASE("Casorati root counting") {
  // g0 = 0, g1 = x: C(x) = x + 1 is linear.
  ShiftFamily lin({poly1({{0, 0}}), poly1({{0, 1}})}, {1.0});
  for (double r : {1.0, 5.0, 20.0}) CHECK(casorati_roots_counting(lin, r, kQ1) == 0.0);
  // g1 = max(x, 2x - 3): C(x) = g1(x + 1) = max(x + 1, 2x - 1), corner of jump 1 at x = 2.
  ShiftFamily corner({poly1({{0, 0}}), poly1({{0, 1}, {-3, 2}})}, {1.0});
  for (double r : {1.0, 2.0, 3.0, 10.0, 50.0}) {
    CHECK(casorati_roots_counting(corner, r, kQ1) == doctest::Approx(0.5 * std::max(0.0, r - 2.0)).epsilon(1e-9));
  }
}

TEST_CASE("essential terms examples") {
  CombinationBasis parallel{{poly1({{0, 1}}), poly1({{0, 1}})}, {0.0, -5.0}};
  auto e1 = essential_terms(parallel);
  CHECK(e1.indices == std::vector<std::size_t>{0});
  CHECK(e1.length() == 1);
  CHECK(e1.exact);

  CombinationBasis abs{{poly1({{0, 1}}), poly1({{0, -1}})}, {0.0, 0.0}};
  auto e2 = essential_terms(abs);
  CHECK(e2.indices == std::vector<std::size_t>{0, 1});
  CHECK(e2.length() == 2);

  // f = [max(x, 0) : x] and P = 0 x0 (+) (-5) x1: P o f = f0, a single essential term.
  ProjectiveMap f({poly1({{0, 1}, {0, 0}}), poly1({{0, 1}})});
  auto comb = combination_of(linear_form({0, -5}), f, 1);
  auto e3 = essential_terms(comb);
  CHECK(e3.indices == std::vector<std::size_t>{0});
  CHECK(e3.length_max < 2);
}

TEST_CASE("greedy length bound can exceed the certified lower bound") {
  // |x| covers x and -x, so l = 1, but neither x nor -x dominates |x| strictly.
  CombinationBasis c{{poly1({{0, 1}, {0, -1}}), poly1({{0, 1}}), poly1({{0, -1}})}, {0.0, 0.0, 0.0}};
  auto e = essential_terms(c);
  CHECK(e.length_min <= 1);
  CHECK(e.length_max >= e.length_min);
  CHECK(e.length_max <= 3);
}

TEST_CASE("essential terms are monotone in the coefficients") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> cu(-3, 3), up(0, 2);
  for (int it = 0; it < 30; ++it) {
    CombinationBasis comb;
    for (int k = 0; k < 4; ++k) {
      comb.basis.push_back(random_poly(rng, 1 + it % 2, 2, 2, 2));
      comb.coeffs.push_back(cu(rng));
    }
    auto base = essential_terms(comb);
    for (std::size_t k : base.indices) {
      auto raised = comb;
      raised.coeffs[k] = raised.coeffs[k].value() + up(rng);
      auto e = essential_terms(raised);
      CHECK(std::find(e.indices.begin(), e.indices.end(), k) != e.indices.end());
    }
    for (std::size_t k = 0; k < 4; ++k) {
      auto lowered = comb;
      lowered.coeffs[k] = TropicalNumber::bottom();
      auto e = essential_terms(lowered);
      CHECK(std::find(e.indices.begin(), e.indices.end(), k) == e.indices.end());
    }
  }
}

TEST_CASE("ddg examples") {
  CombinationBasis abs{{poly1({{0, 1}}), poly1({{0, -1}})}, {0.0, 0.0}};
  std::vector<CombinationBasis> all{abs, abs};
  CHECK(ddg(all, 2).max == 0);
  auto bottom = abs;
  bottom.coeffs[1] = TropicalNumber::bottom();
  std::vector<CombinationBasis> one{abs, bottom};
  CHECK(ddg(one, 2).min >= 1);

  std::vector<CombinationBasis> values;
  for (const auto& P : three_values()) values.push_back(combination_of(P, example_map(), 1));
  auto r = ddg(values, 2);
  CHECK(r.min == 0);
  CHECK(r.max == 0);
}

TEST_CASE("smt_check on the three-value instance") {
  auto Ps = three_values();
  auto grid = linear_grid(1.0, 100.0, 100);
  auto rep = smt_check(example_map(), Ps, pt({1.0}), grid, kQ1);
  CHECK(rep.M == 1);
  CHECK(rep.d == 1);
  CHECK(rep.lambda_min == 0);
  CHECK(rep.lambda_max == 0);
  CHECK_FALSE(rep.vacuous);
  CHECK(rep.casorati_available);
  for (const auto& row : rep.rows) {
    // T_f = (r - 1)/2 and N_j = (r - 1 + b_j)/2 for r > 1.
    if (row.r > 1.0) {
      CHECK(row.T_f == doctest::Approx((row.r - 1) / 2));
      CHECK(row.N[2] == doctest::Approx((row.r - 1 + 0.75) / 2));
    }
    if (row.r >= 10) {
      CHECK(row.slack >= -0.5);
      CHECK(std::abs((3.0 - 2.0) * row.T_f - row.N[2]) < 1.0);
    }
    // The middle expression differs from the tail sum by the leading terms and the Casorati term.
    CHECK(row.middle - row.rhs == doctest::Approx(row.N[0] + row.N[1] - row.casorati_N));
    CHECK(row.upper == doctest::Approx((3.0 - 2.0) * row.T_f));
  }
  CHECK(rep.trend_ok);
}

TEST_CASE("vacuous reports") {
  std::vector<HomogeneousPolynomial> two{linear_form({0, 0.25}), linear_form({0, 0.5})};
  auto rep = smt_check(example_map(), two, pt({1.0}), linear_grid(1.0, 50.0, 50), kQ1);
  CHECK(rep.vacuous);
  for (const auto& row : rep.rows) CHECK(row.slack >= 0.0);
}

TEST_CASE("q_smt_check") {
  auto Ps = three_values();
  auto rep = q_smt_check(example_map(), Ps, 2.0, linear_grid(1.0, 100.0, 100), kQ1);
  CHECK(rep.q_variant);
  for (const auto& row : rep.rows) {
    if (row.r >= 10) CHECK(row.slack >= -0.5);
  }
  CHECK(code_of([&] { (void)q_smt_check(example_map(), Ps, 1.0, linear_grid(1.0, 10.0, 10), kQ1); }) ==
        Errc::excluded_scale);
}

TEST_CASE("smt_check rejects malformed input") {
  std::vector<HomogeneousPolynomial> wrong{linear_form({0, 0, 0})};
  CHECK(code_of([&] { (void)smt_check(example_map(), wrong, pt({1.0}), linear_grid(1, 10, 10), kQ1); }) ==
        Errc::arity_mismatch);
  std::vector<HomogeneousPolynomial> none;
  CHECK(code_of([&] { (void)smt_check(example_map(), none, pt({1.0}), linear_grid(1, 10, 10), kQ1); }) ==
        Errc::too_few_hypersurfaces);
}

TEST_CASE("defect relation") {
  auto grid = log_grid(1.0, 1e4, 41);
  auto rep = defect_relation_check(example_map(), three_values(), grid, kQ1);
  for (double d : rep.defects) CHECK(d < 0.05);
  CHECK(rep.sum_tail < 0.05);
  CHECK(rep.holds);
  CHECK(rep.sum_all < rep.bound_all);
  std::vector<HomogeneousPolynomial> one{linear_form({0, 0.5})};
  CHECK(defect_relation_check(example_map(), one, grid, kQ1).holds);
}

TEST_CASE("raising a hypersurface to a power scales its root counting") {
  std::mt19937_64 rng(74);
  std::uniform_real_distribution<double> cu(-2, 2);
  for (int it = 0; it < 10; ++it) {
    ProjectiveMap f({random_poly(rng, 1, 3, 3, 3), random_poly(rng, 1, 3, 3, 3)});
    auto P = linear_form({cu(rng), cu(rng)});
    unsigned k = 2 + it % 3;
    RadialProfile a = RadialProfile(TropicalRational(compose(P, f)), kQ1, 50.0).negated();
    RadialProfile b = RadialProfile(TropicalRational(compose(P.power(k), f)), kQ1, 50.0).negated();
    for (double r : {1.0, 7.0, 50.0}) CHECK(b.counting(r) == doctest::Approx(k * a.counting(r)).epsilon(1e-12));
  }
}

TEST_CASE("common degree is the lcm") {
  std::vector<HomogeneousPolynomial> Ps{linear_form({0, 0}), linear_form({0, 0}).power(2),
                                        linear_form({0, 0}).power(3)};
  CHECK(common_degree(Ps) == 6);
}
