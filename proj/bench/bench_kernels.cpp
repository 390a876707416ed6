// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "qseries/oracle.hpp"
#include "qseries/qcombinat.hpp"

namespace {

void BM_HilbertTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qseries::hilbert_table(k, k + 1, 4, w));
}

void BM_HilbertTableSerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qseries::hilbert_table_serial(k, k + 1, 4, w));
}

void BM_GordonCounts(benchmark::State& state) {
  const qseries::GordonCondition cond(3, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qseries::gordon_count_table(cond, n));
}

void BM_GordonCountsSerial(benchmark::State& state) {
  const qseries::GordonCondition cond(3, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qseries::gordon_count_table_serial(cond, n));
}

void BM_CongruenceCounts(benchmark::State& state) {
  const qseries::GordonCondition cond(3, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qseries::congruence_count_table(cond, n));
}

void BM_CongruenceCountsSerial(benchmark::State& state) {
  const qseries::GordonCondition cond(3, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qseries::congruence_count_table_serial(cond, n));
}

}  // namespace

BENCHMARK(BM_HilbertTable)->Args({1, 12})->Args({2, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertTableSerial)->Args({1, 12})->Args({2, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GordonCounts)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GordonCountsSerial)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceCounts)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceCountsSerial)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
