// Parallel kernels against their serial reference implementations.
//
//   ./build/bench/vpfair_bench --benchmark_filter=Grid
//
// Thread count for the parallel variants is the benchmark argument; the
// serial reference ignores it.

#include <benchmark/benchmark.h>

#include <random>

#include "vpfair/experiment.hpp"
#include "vpfair/metrics.hpp"
#include "vpfair/simulator.hpp"

namespace {

using namespace vpfair;

GridSpec bench_grid() {
  GridSpec spec;
  spec.alphas = {-1.0, -0.5, 0.0, 0.5, 1.0};
  spec.replicates = 40;
  return spec;
}

void BM_GridReference(benchmark::State& state) {
  const auto spec = bench_grid();
  for (auto _ : state) benchmark::DoNotOptimize(reference::run_grid(spec));
  state.SetItemsProcessed(state.iterations() * 15 * 40);
}
BENCHMARK(BM_GridReference)->Unit(benchmark::kMillisecond);

void BM_GridParallel(benchmark::State& state) {
  const auto spec = bench_grid();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_grid(spec, threads));
  state.SetItemsProcessed(state.iterations() * 15 * 40);
}
BENCHMARK(BM_GridParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BatchReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::generate_batch(builtin_set("S2"), ScenarioConfig{}, 0.3, 200, 7));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_BatchReference)->Unit(benchmark::kMillisecond);

void BM_BatchParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_batch(builtin_set("S2"), ScenarioConfig{}, 0.3, 200, 7, threads));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_BatchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

// Single-ranking metric cost at the study's list length.
void BM_Metric(benchmark::State& state) {
  const auto metric = static_cast<MetricId>(state.range(0));
  const auto ranking = sample_ranking(builtin_set("S1"), WeightMap{1, 1, 1, 1, 1, 1, 1}, SeededStream{3, 0});
  const auto spec = ProtectedSpec::opposing();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(metric, ranking, spec));
  state.SetLabel(std::string(to_string(metric)));
}
BENCHMARK(BM_Metric)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
