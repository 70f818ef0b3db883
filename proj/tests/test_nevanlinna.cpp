#include <algorithm>
#include <cmath>
#include <cstring>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "tropnev/error.hpp"
#include "tropnev/nevanlinna.hpp"

using namespace tropnev;
using namespace tropnev::testing;

namespace {

const SphereQuadrature kQ1 = make_quadrature(1, 2);

std::vector<double> pt(std::initializer_list<double> v) { return v; }

double spread(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

TEST_CASE("proximity examples") {
  CHECK(proximity(linear_1d(), 4.0, kQ1) == 2.0);
  CHECK(proximity(TropicalRational::constant(1, 3.0), 7.0, kQ1) == 3.0);
  CHECK(proximity(TropicalRational::constant(2, 3.0), 7.0, default_quadrature(2)) == doctest::Approx(3.0));
  CHECK(std::abs(proximity(example_abs_diff(), 1.0, default_quadrature(2)) - oracle::abs_diff_positive_mean()) <
        1e-6);
}

TEST_CASE("counting_density examples") {
  CHECK(counting_density(example_root_pole(), 2.0, kQ1) == 1.0);
  CHECK(counting_density(example_root_pole(), 0.5, kQ1) == 0.0);
  TropicalRational entire(TropicalPolynomial(1, {{0.0, {1.0}}, {2.0, {-1.0}}}));
  for (double t : {0.5, 3.0, 40.0}) CHECK(counting_density(entire, t, kQ1) == 0.0);
  auto q2 = default_quadrature(2);
  for (double t : {0.1, 1.0, 10.0}) {
    CHECK(std::abs(counting_density(example_abs_diff(), t, q2) - kAbsDiffMultiplicity) < 1e-6);
  }
}

TEST_CASE("counting examples") {
  CHECK(counting(example_root_pole(), 3.0, kQ1) == 1.0);
  TropicalRational entire(TropicalPolynomial(1, {{0.0, {1.0}}, {2.0, {-1.0}}}));
  CHECK(counting(entire, 9.0, kQ1) == 0.0);
  CHECK(std::abs(counting(example_abs_diff(), 2.0, default_quadrature(2)) -
                 2.0 * (2.0 * std::sqrt(2.0) - 2.0) / M_PI) < 1e-6);
}

TEST_CASE("characteristic examples") {
  auto f = example_root_pole();
  CHECK(proximity(f, 3.0, kQ1) == 0.0);
  CHECK(counting(f, 3.0, kQ1) == 1.0);
  CHECK(characteristic(f, 3.0, kQ1) == 1.0);
  CHECK(characteristic(linear_1d(), 4.0, kQ1) == 2.0);
  CHECK(std::abs(characteristic(example_abs_diff(), 1.0, default_quadrature(2)) -
                 2.0 * oracle::abs_diff_positive_mean()) < 1e-6);
}

TEST_CASE("char_table of the root/pole example is max(0, (r-1)/2)") {
  auto grid = linear_grid(1.0, 100.0, 100);
  auto t = char_table(example_root_pole(), grid, kQ1);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(std::abs(t.T[k] - std::max(0.0, (grid[k] - 1.0) / 2.0)) <= 1e-9);
  }
  CHECK(t.scheme == QuadratureScheme::exact_pair);
  std::vector<double> bad{2.0, 1.0};
  CHECK_THROWS_AS(char_table(example_root_pole(), bad, kQ1), Error);
}

TEST_CASE("radius checks") {
  RadialProfile p(example_root_pole(), kQ1, 10.0);
  CHECK_THROWS_AS((void)p.counting(11.0), Error);
  CHECK_THROWS_AS((void)p.counting(0.0), Error);
  CHECK_NOTHROW((void)p.counting(10.0));
}

TEST_CASE("jensen residual examples") {
  auto f = example_root_pole();
  CHECK(f.eval(pt({0})) == -1.0);
  for (double r = 1; r <= 100; r += 1) CHECK(jensen_residual(f, r, kQ1) == 0.0);
  CHECK(jensen_residual(TropicalRational::constant(1, 4.5), 3.0, kQ1) == 0.0);
  auto q = make_quadrature(2, 4096, 7);
  for (const auto& g : corpus_2d(10, 31)) {
    RadialProfile p(g, q, 50.0);
    RadialProfile n = p.negated();
    for (double r = 1; r <= 50; r += 1) {
      CHECK(std::abs(p.characteristic(r) - n.characteristic(r) - p.value_at_origin()) < 5.0 / 4096);
    }
  }
}

TEST_CASE("counting equals half the integral of the counting density") {
  // Breakpoints of the dyadic corpus are multiples of 1/(8 * lcm(1..8)), so a
  // midpoint rule on that lattice integrates the step function n(t) exactly.
  const double h = 1.0 / 6720.0;
  for (const auto& f : corpus_1d(10, 41)) {
    RadialProfile p(f, kQ1, 5.0);
    for (double r : {1.0, 2.5, 5.0}) {
      double integral = 0.0;
      for (double t = h / 2; t < r; t += h) integral += p.counting_density(t) * h;
      CHECK(std::abs(p.counting(r) - 0.5 * integral) < 1e-6);
    }
  }
}

TEST_CASE("counting_density agrees with slope scanning") {
  auto q = make_quadrature(2, 64);
  for (const auto& f : corpus_2d(5, 42)) {
    for (double t : {1.0, 4.0}) {
      CHECK(counting_density(f, t, q) == doctest::Approx(oracle::counting_density_scan(f, t, q)).epsilon(1e-3));
    }
  }
  for (const auto& f : corpus_1d(10, 43)) {
    CHECK(counting_density(f, 3.0, kQ1) == doctest::Approx(oracle::counting_density_scan(f, 3.0, kQ1)).epsilon(1e-3));
  }
}

TEST_CASE("scaling, tropical sum and product inequalities") {
  auto check_pair = [](const TropicalRational& f, const TropicalRational& g, const SphereQuadrature& q) {
    const double R = 30.0;
    RadialProfile pf(f, q, R), pg(g, q, R);
    RadialProfile psum(t_add(f, g), q, R), pmul(t_mul(f, g), q, R), pa(f.scaled(2.5), q, R);
    for (double r : {0.5, 1.0, 7.0, 30.0}) {
      const double tol = 1e-9;
      CHECK(std::abs(pa.proximity(r) - 2.5 * pf.proximity(r)) <= tol * std::max(1.0, pa.proximity(r)));
      CHECK(std::abs(pa.counting(r) - 2.5 * pf.counting(r)) <= tol * std::max(1.0, pa.counting(r)));
      CHECK(std::abs(pa.characteristic(r) - 2.5 * pf.characteristic(r)) <=
            tol * std::max(1.0, pa.characteristic(r)));
      CHECK(psum.proximity(r) <= pf.proximity(r) + pg.proximity(r) + tol);
      CHECK(psum.characteristic(r) <= pf.characteristic(r) + pg.characteristic(r) + tol);
      CHECK(pmul.proximity(r) <= pf.proximity(r) + pg.proximity(r) + tol);
      CHECK(pmul.counting(r) <= pf.counting(r) + pg.counting(r) + tol);
      CHECK(pmul.characteristic(r) <= pf.characteristic(r) + pg.characteristic(r) + tol);
    }
  };
  auto c1 = corpus_1d(40, 51);
  for (std::size_t k = 0; k + 1 < c1.size(); k += 2) check_pair(c1[k], c1[k + 1], kQ1);
  auto q2 = make_quadrature(2, 512);
  auto c2 = corpus_2d(10, 52);
  for (std::size_t k = 0; k + 1 < c2.size(); k += 2) check_pair(c2[k], c2[k + 1], q2);
}

TEST_CASE("characteristic is convex in r") {
  auto grid = linear_grid(0.5, 40.0, 80);
  auto check = [&](const TropicalRational& f, const SphereQuadrature& q) {
    auto t = char_table(f, grid, q);
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) CHECK(t.T[k + 1] - 2 * t.T[k] + t.T[k - 1] >= -1e-9);
  };
  for (const auto& f : corpus_1d(30, 53)) check(f, kQ1);
  auto q2 = make_quadrature(2, 256);
  for (const auto& f : corpus_2d(5, 54)) check(f, q2);
}

TEST_CASE("functionals are bit-reproducible") {
  auto q = make_quadrature(3, 512, 9);
  TropicalRational f(TropicalPolynomial(3, {{0.0, {1, 0, 0}}, {0.5, {0, -1, 1}}}),
                     TropicalPolynomial(3, {{0.0, {0, 1, 0}}, {0.0, {0, 0, -1}}}));
  double a = characteristic(f, 3.7, q);
  double b = characteristic(f, 3.7, make_quadrature(3, 512, 9));
  CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("pole_infimum and fmt_gap") {
  auto f = example_root_pole();
  CHECK(pole_infimum(f, kQ1) == 0.0);
  CHECK(pole_infimum(linear_1d(), kQ1) == INFINITY);
  auto grid = linear_grid(1.0, 100.0, 100);
  auto g = fmt_gap(f, -2.0, grid, kQ1);
  CHECK_FALSE(g.above_lf);
  CHECK(spread(g.gap) < 2.0 * 2.0 + 2.0);
  auto e = fmt_gap(linear_1d(), 0.0, grid, kQ1);
  CHECK_FALSE(e.above_lf);
  CHECK(spread(e.gap) < 2.0);
  CHECK(fmt_gap(f, 1.0, grid, kQ1).above_lf);
}

TEST_CASE("log-derivative proximity") {
  for (double r : {1.0, 10.0, 100.0}) CHECK(log_diff_proximity(linear_1d(), pt({1}), r, kQ1) == 1.0);
  auto f = example_root_pole();
  CHECK(log_diff_proximity(f, pt({1}), 100.0, kQ1) <= ldl_bound(f, pt({1}), 100.0, 2.0, kQ1));
  CHECK(q_log_diff_proximity(linear_1d(), 2.0, 4.0, kQ1) == 2.0);
}

TEST_CASE("log-derivative ratio decays along the corpus") {
  std::vector<double> radii{10.0, 100.0, 1000.0, 10000.0};
  for (const auto& f : corpus_1d(50, 55)) {
    if (!has_pole_1d(f)) continue;
    std::vector<double> c{1.0};
    RadialProfile quot(shift_quotient(f, c), kQ1, 1e4), pf(f, kQ1, 1e4);
    double last = pf.characteristic(1e4) > 0 ? quot.proximity(1e4) / pf.characteristic(1e4) : 0.0;
    double first = quot.proximity(10.0) / std::max(1e-300, pf.characteristic(10.0));
    CHECK(last < 0.05);
    CHECK(last <= first + 1e-12);
  }
}

TEST_CASE("growth estimates") {
  auto grid = log_grid(1.0, 1e4, 61);
  auto g = growth_estimate(example_root_pole(), grid, kQ1);
  CHECK(g.rho >= 0.9);
  CHECK(g.rho <= 1.1);
  CHECK(growth_estimate(TropicalRational::constant(1, 2.0), grid, kQ1).rho == 0.0);
  CHECK(growth_estimate(example_abs_diff(), grid, make_quadrature(2, 256)).subnormal);
  for (const auto& f : corpus_1d(20, 56)) {
    if (!has_pole_1d(f)) continue;
    auto e = growth_estimate(f, grid, kQ1);
    CHECK(e.rho >= 0.9);
    CHECK(e.rho <= 1.1);
  }
  auto short_grid = log_grid(1.0, 100.0, 10);
  CHECK_THROWS_AS(growth_estimate(example_root_pole(), short_grid, kQ1), Error);
}

TEST_CASE("value defect of the root/pole example") {
  auto grid = log_grid(1.0, 1e4, 41);
  CHECK(value_defect(example_root_pole(), -0.5, grid, kQ1) < 0.05);
  try {
    (void)value_defect(TropicalRational::constant(1, -1.0), 0.0, grid, kQ1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bounded_characteristic);
  }
}
