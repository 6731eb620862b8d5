#include <benchmark/benchmark.h>

#include "permlab/exact_oracle.hpp"
#include "permlab/tree_density.hpp"

using namespace permlab;

static void BM_ExactDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_distribution(n, Rational(1, 3)));
}
BENCHMARK(BM_ExactDistribution)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(n, Rational(1, 3)));
}
BENCHMARK(BM_EnumerateChain)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_CographFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cograph_formula_law(n, Rational(1, 2)));
}
BENCHMARK(BM_CographFormula)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
