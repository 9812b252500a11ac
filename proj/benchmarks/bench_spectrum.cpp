#include <benchmark/benchmark.h>

#include "gmpd/constructors.hpp"
#include "gmpd/spectrum.hpp"

static void BM_EnumerateBruteforce(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto result = gmpd::enumerate_bruteforce(n);
    benchmark::DoNotOptimize(result.representatives.size());
  }
}
BENCHMARK(BM_EnumerateBruteforce)->DenseRange(4, 8, 1)->Unit(benchmark::kMillisecond);

static void BM_EnumerateShapes(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::enumerate_shapes(n).size());
}
BENCHMARK(BM_EnumerateShapes)->Arg(10)->Arg(1000);

static void BM_CanonicalForm(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spectrum = gmpd::spectrum_of(gmpd::from_counts(n, 0, n, n));
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::canonical_form(spectrum));
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMicrosecond);
