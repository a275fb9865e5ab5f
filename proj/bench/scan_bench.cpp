// Serial reference scan vs. the OpenMP-partitioned scan over the same range.

#include <benchmark/benchmark.h>

#include "xsign/oracle.hpp"

namespace {

void BM_SerialSummary(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xsign::serial::scan_summary(1, hi));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ParallelSummary(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xsign::scan_summary(1, hi));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SerialSigns(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xsign::serial::scan_signs(1, hi));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ParallelSigns(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(xsign::scan_signs(1, hi));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SerialSummary)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24)->UseRealTime();
BENCHMARK(BM_ParallelSummary)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24)->UseRealTime();
BENCHMARK(BM_SerialSigns)->Arg(1 << 20)->Arg(1 << 24)->UseRealTime();
BENCHMARK(BM_ParallelSigns)->Arg(1 << 20)->Arg(1 << 24)->UseRealTime();

BENCHMARK_MAIN();
