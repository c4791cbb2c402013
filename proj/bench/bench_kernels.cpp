// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "floorcount/charnum.hpp"
#include "floorcount/diagram.hpp"
#include "floorcount/floor_diagrams.hpp"
#include "floorcount/oracles.hpp"

namespace fc = floorcount;

namespace {

fc::LabelPartition lines_for(int d, int k) {
  return fc::LabelPartition::for_degree(d, fc::default_lines(d, k));
}

void BM_CountFdSerial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto labels = lines_for(d, static_cast<int>(state.range(1)));
  fc::enumerate_diagrams(d);
  for (auto _ : state) benchmark::DoNotOptimize(fc::count_fd_serial(d, labels));
}

void BM_CountFdParallel(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto labels = lines_for(d, static_cast<int>(state.range(1)));
  fc::enumerate_diagrams(d);
  for (auto _ : state) benchmark::DoNotOptimize(fc::count_fd(d, labels));
}

void BM_MonodromySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fc::monodromy_hurwitz_serial(static_cast<int>(state.range(0))));
}

void BM_MonodromyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fc::monodromy_hurwitz(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_CountFdSerial)->Args({3, 0})->Args({3, 3})->Args({3, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountFdParallel)->Args({3, 0})->Args({3, 3})->Args({3, 8})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonodromySerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonodromyParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
