#include <benchmark/benchmark.h>

#include "permlab/brownian_baseline.hpp"
#include "permlab/chain_sampler.hpp"
#include "permlab/order_construction.hpp"

using namespace permlab;

static void BM_ChainPerm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_chain_perm(n, 0.5, rng));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChainPerm)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_LambdaFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const OrderStream st = OrderStream::generate(n - 1, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_fast(st, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_LambdaFast)->RangeMultiplier(4)->Range(16, 65536)->Complexity(benchmark::oNLogN);

static void BM_LambdaReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const OrderStream st = OrderStream::generate(n - 1, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_reference(st, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_LambdaReference)->RangeMultiplier(4)->Range(16, 2048)->Complexity(benchmark::oNSquared);

static void BM_CographChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_cograph_chain(n, 0.5, rng));
}
BENCHMARK(BM_CographChain)->Arg(50)->Arg(200);

static void BM_PhiPoint(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sample_phi_point(0.6, K, rng));
}
BENCHMARK(BM_PhiPoint)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_BrownianPermutation(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(5);
  for (auto _ : state) {
    const auto e = sample_excursion(m, 0.5, rng);
    benchmark::DoNotOptimize(brownian_permutation(e));
  }
}
BENCHMARK(BM_BrownianPermutation)->Arg(1000)->Arg(10000);
