// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "sepdist/geometry.hpp"
#include "sepdist/product_oracle.hpp"

using namespace sepdist;

namespace {

HermitianOp probe_operator() {
  Rng rng(derive_seed(42, 0));
  return random_hermitian(4, rng);
}

void BM_GridOracle_Parallel(benchmark::State& state) {
  const HermitianOp x = probe_operator();
  for (auto _ : state) benchmark::DoNotOptimize(grid_oracle_min(x, static_cast<int>(state.range(0))));
}

void BM_GridOracle_Serial(benchmark::State& state) {
  const HermitianOp x = probe_operator();
  for (auto _ : state) benchmark::DoNotOptimize(serial::grid_oracle_min(x, static_cast<int>(state.range(0))));
}

void BM_Multistart_Parallel(benchmark::State& state) {
  const HermitianOp x = probe_operator();
  OracleConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_over_separable(x, cfg));
}

void BM_Multistart_Serial(benchmark::State& state) {
  const HermitianOp x = probe_operator();
  OracleConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::min_over_separable(x, cfg));
}

void BM_SampleRegions_Parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_regions(static_cast<int>(state.range(0))));
}

void BM_SampleRegions_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::sample_regions(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_GridOracle_Parallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOracle_Serial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multistart_Parallel)->Arg(32)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Multistart_Serial)->Arg(32)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleRegions_Parallel)->Arg(21)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleRegions_Serial)->Arg(21)->Arg(61)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
