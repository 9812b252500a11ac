#include <benchmark/benchmark.h>

#include "gmpd/constructors.hpp"
#include "gmpd/lattice.hpp"

// k rank-two locals: 3^k elements.
static void BM_BuildLattice(benchmark::State &state) {
  const auto model = gmpd::from_counts(0, 0, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    auto lat = gmpd::build(model);
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK(BM_BuildLattice)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_QuasiLocalCensus(benchmark::State &state) {
  const auto lat = gmpd::build(gmpd::from_counts(0, 0, static_cast<std::size_t>(state.range(0)), 0));
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::quasi_local_elements(lat).size());
}
BENCHMARK(BM_QuasiLocalCensus)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

static void BM_LongestChain(benchmark::State &state) {
  const auto lat = gmpd::build(gmpd::from_counts(0, 0, static_cast<std::size_t>(state.range(0)), 0));
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::longest_chain_length(lat));
}
BENCHMARK(BM_LongestChain)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

static void BM_EmitHasse(benchmark::State &state) {
  const auto lat = gmpd::build(gmpd::from_counts(0, 0, static_cast<std::size_t>(state.range(0)), 0));
  for (auto _ : state) benchmark::DoNotOptimize(gmpd::emit_hasse(lat).size());
}
BENCHMARK(BM_EmitHasse)->DenseRange(4, 8, 4)->Unit(benchmark::kMicrosecond);
