#include <benchmark/benchmark.h>

#include "gmpd/constructors.hpp"
#include "gmpd/counting.hpp"
#include "gmpd/verify.hpp"

static void BM_TotalCount(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = gmpd::from_counts(n, n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::total_count(model));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TotalCount)->RangeMultiplier(4)->Range(1, 1024)->Complexity();

static void BM_Characterize(benchmark::State &state) {
  const auto model = gmpd::from_counts(3, 2, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::characterize(model));
}
BENCHMARK(BM_Characterize);

static void BM_VerifyAll(benchmark::State &state) {
  const auto max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto summary = gmpd::verify_all(max);
    benchmark::DoNotOptimize(summary.checks_run);
  }
}
BENCHMARK(BM_VerifyAll)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
