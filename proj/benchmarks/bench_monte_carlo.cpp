#include <vector>

#include <benchmark/benchmark.h>

#include "mstpoly/monte_carlo.hpp"

namespace {

using namespace mstpoly;

void BM_Simulate(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  constexpr std::uint64_t kTrials = 100'000;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(g, kTrials, 1, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kTrials));
}
BENCHMARK(BM_Simulate)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MstLength(benchmark::State& state) {
  const Graph g = complete_graph(10);
  std::vector<double> w(static_cast<std::size_t>(g.m()));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    draw_weights(3, trial++, w);
    benchmark::DoNotOptimize(mst_length(g, w));
  }
}
BENCHMARK(BM_MstLength);

}  // namespace
