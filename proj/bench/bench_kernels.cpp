// Serial reference scan vs the OpenMP scan, plus the orbit and table stages.
// Run with --benchmark_min_time=1x for a quick pass; the scans take seconds.
#include <benchmark/benchmark.h>

#include "icosa/catalog.hpp"
#include "icosa/classify.hpp"

namespace {

const ico::GroupTable& group() {
  static const ico::GroupTable G = ico::build_group();
  return G;
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ico::enumerate_serial(group()).size());
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_EnumerateOmp(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ico::enumerate_omp(group(), threads).size());
  state.counters["threads"] = threads;
}
BENCHMARK(BM_EnumerateOmp)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(2)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8);

void BM_BraidAndOrbits(benchmark::State& state) {
  static const ico::TripleSet S = ico::enumerate_S(group());
  for (auto _ : state) {
    ico::BraidTables B = ico::build_braid_tables(S);
    benchmark::DoNotOptimize(ico::geometric_orbits(S, B).count());
  }
}
BENCHMARK(BM_BraidAndOrbits)->Unit(benchmark::kMillisecond);

void BM_BuildTable(benchmark::State& state) {
  static const ico::Pipeline P = ico::run_pipeline();
  for (auto _ : state) benchmark::DoNotOptimize(ico::build_table(P).classes.size());
}
BENCHMARK(BM_BuildTable)->Unit(benchmark::kMillisecond);

void BM_VerifyCatalogEntry(benchmark::State& state, const char* id) {
  const auto& e = ico::find_entry(id);
  for (auto _ : state) benchmark::DoNotOptimize(ico::verify_entry(e).residual_zero);
}
BENCHMARK_CAPTURE(BM_VerifyCatalogEntry, thmB, "thmB")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCatalogEntry, dm41, "dm41")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
