#include <benchmark/benchmark.h>

#include "zagreb/scan.hpp"

using namespace zagreb;

namespace {

const TreeStream& stream_of(int n) {
  static std::map<int, TreeStream> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, free_trees(n)).first;
  return it->second;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto& s = stream_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::evaluate(s, 4));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto& s = stream_of(static_cast<int>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::evaluate(s, 4, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_CellsSerial(benchmark::State& state) {
  auto trees = serial::evaluate(stream_of(static_cast<int>(state.range(0))), 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::extremal_cells(trees, 2));
}

void BM_CellsParallel(benchmark::State& state) {
  auto trees = serial::evaluate(stream_of(static_cast<int>(state.range(0))), 3);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::extremal_cells(trees, 2, jobs, 16));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->ArgsProduct({{14, 16}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CellsSerial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellsParallel)->ArgsProduct({{14, 16}, {1, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
