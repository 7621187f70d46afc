// Serial reference against the OpenMP kernels. Thread count comes from
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "pbwdeg/homology.hpp"
#include "pbwdeg/pbw.hpp"

namespace {

using namespace pbwdeg;

PBWShape full_shape(int n) {
  std::vector<int> j(static_cast<std::size_t>(n - 2));
  std::iota(j.begin(), j.end(), 1);
  return PBWShape::from_j(n, j);
}

void BM_FixedPointsSerial(benchmark::State& state) {
  const PBWShape shape = full_shape(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(shape));
}

void BM_FixedPointsParallel(benchmark::State& state) {
  const PBWShape shape = full_shape(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points_parallel(shape));
}

void BM_RunAllSerial(benchmark::State& state) {
  PipelineOptions options;
  options.samples = 5;
  for (auto _ : state) benchmark::DoNotOptimize(run_all(static_cast<int>(state.range(0)), options));
}

void BM_RunAllParallel(benchmark::State& state) {
  PipelineOptions options;
  options.samples = 5;
  for (auto _ : state) benchmark::DoNotOptimize(run_all_parallel(static_cast<int>(state.range(0)), options));
}

}  // namespace

BENCHMARK(BM_FixedPointsSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPointsParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunAllSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunAllParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
