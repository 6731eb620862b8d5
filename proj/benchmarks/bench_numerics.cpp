#include <benchmark/benchmark.h>

#include <vector>

#include "permlab/intensity.hpp"
#include "permlab/permuton_ops.hpp"
#include "permlab/transport.hpp"

using namespace permlab;

static void BM_Density(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intensity_density(0.6, x, 0.37));
    x = x < 0.9 ? x + 0.013 : 0.1;
  }
}
BENCHMARK(BM_Density);

static void BM_ClosedFormGrid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_grid(0.6, k, 10000, 7));
}
BENCHMARK(BM_ClosedFormGrid)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_SampleIntensity(benchmark::State& state) {
  Rng rng(8);
  for (auto _ : state) benchmark::DoNotOptimize(sample_intensity(0.6, rng));
}
BENCHMARK(BM_SampleIntensity);

static void BM_PsiIterate(benchmark::State& state) {
  Rng rng(9);
  std::vector<double> nu(static_cast<std::size_t>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(psi_iterate(nu, 0.4, rng));
}
BENCHMARK(BM_PsiIterate)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_W1Grid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(10);
  for (auto _ : state) {
    state.PauseTiming();
    GridMeasure a(k), b(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        a.at(i, j) = rng.uniform01();
        b.at(i, j) = rng.uniform01();
      }
    a *= 1.0 / a.total();
    b *= 1.0 / b.total();
    state.ResumeTiming();
    benchmark::DoNotOptimize(w1_grid(a, b));
  }
}
BENCHMARK(BM_W1Grid)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
