#include <benchmark/benchmark.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tropnev/matrix.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/quadrature.hpp"
#include "tropnev/slice.hpp"

namespace {

using namespace tropnev;

TropicalMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  TropicalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = TropicalNumber(d(rng));
  return a;
}

void BM_DetAssignment(benchmark::State& state) {
  auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(trop_det(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetAssignment)->RangeMultiplier(2)->Range(2, 256)->Complexity(benchmark::oNCubed);

void BM_DetEnumeration(benchmark::State& state) {
  auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::det_by_enumeration(a));
}
BENCHMARK(BM_DetEnumeration)->DenseRange(2, 9);

void BM_RaySlice(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  auto fs = testing::corpus(dim, 32, 3);
  auto quad = make_quadrature(dim, 64, 5);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& f = fs[k % fs.size()];
    benchmark::DoNotOptimize(ray_slice(f, quad.nodes[k % quad.size()], 100.0));
    ++k;
  }
}
BENCHMARK(BM_RaySlice)->Arg(1)->Arg(2)->Arg(3);

void BM_CharTable(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const std::size_t K = static_cast<std::size_t>(state.range(1));
  auto f = testing::corpus(dim, 1, 11).front();
  auto quad = make_quadrature(dim, K, 5);
  auto grid = log_grid(1.0, 1e4, 61);
  for (auto _ : state) benchmark::DoNotOptimize(char_table(f, grid, quad));
}
BENCHMARK(BM_CharTable)->Args({1, 2})->Args({2, 512})->Args({2, 4096})->Args({3, 4096});

}  // namespace

BENCHMARK_MAIN();
