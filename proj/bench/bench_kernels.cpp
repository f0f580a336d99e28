// Serial references against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the parallel side.

#include <vector>

#include <benchmark/benchmark.h>

#include "q1dh/information.hpp"
#include "q1dh/transforms.hpp"
#include "q1dh/wavefun.hpp"

using namespace q1dh;

static void BM_EntropyTableSerial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(information::entropy_table_serial(static_cast<int>(st.range(0)), 1e-8));
}
static void BM_EntropyTableParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(information::entropy_table(static_cast<int>(st.range(0)), 1e-8));
}
BENCHMARK(BM_EntropyTableSerial)->Arg(10)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EntropyTableParallel)->Arg(10)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_AdjudicateSerial(benchmark::State& st) {
  const QuantumNumber n(static_cast<int>(st.range(0)));
  const auto grid = transforms::default_grid(n, 64);
  for (auto _ : st)
    benchmark::DoNotOptimize(transforms::adjudicate_serial(n, grid));
}
static void BM_AdjudicateParallel(benchmark::State& st) {
  const QuantumNumber n(static_cast<int>(st.range(0)));
  const auto grid = transforms::default_grid(n, 64);
  for (auto _ : st)
    benchmark::DoNotOptimize(transforms::adjudicate(n, grid));
}
BENCHMARK(BM_AdjudicateSerial)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjudicateParallel)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static std::vector<double> figure_grid() {
  std::vector<double> g;
  for (int i = -150000; i <= 150000; ++i)
    g.push_back(i * 1e-4);
  return g;
}
static void BM_SampleSerial(benchmark::State& st) {
  const auto d = wavefun::rho_1d(QuantumNumber(8));
  const auto g = figure_grid();
  for (auto _ : st)
    benchmark::DoNotOptimize(wavefun::sample_density_serial(d, g));
}
static void BM_SampleParallel(benchmark::State& st) {
  const auto d = wavefun::rho_1d(QuantumNumber(8));
  const auto g = figure_grid();
  for (auto _ : st)
    benchmark::DoNotOptimize(wavefun::sample_density(d, g));
}
BENCHMARK(BM_SampleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
