#include <benchmark/benchmark.h>

#include "mstpoly/enumeration.hpp"

namespace {

using namespace mstpoly;

void BM_RankTableComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  EnumerationOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(build_rank_table(g, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.m()));
}
BENCHMARK(BM_RankTableComplete)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_RankTableThreads(benchmark::State& state) {
  const Graph g = complete_graph(7);
  EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rank_table(g, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.m()));
}
BENCHMARK(BM_RankTableThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DirectIntegrand(benchmark::State& state) {
  const RankTable table = build_rank_table(complete_graph(7));
  for (auto _ : state) benchmark::DoNotOptimize(direct_integrand(table));
}
BENCHMARK(BM_DirectIntegrand);

}  // namespace
