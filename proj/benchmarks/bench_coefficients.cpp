#include <benchmark/benchmark.h>

#include "mstpoly/coefficients.hpp"

namespace {

using namespace mstpoly;

void BM_Route(benchmark::State& state) {
  const Graph g = complete_graph(7);
  const RankTable table = build_rank_table(g);
  const SubgraphCensus census = take_census(g);
  const Route route = kAllRoutes[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(route_name(route));
  for (auto _ : state) benchmark::DoNotOptimize(route_coefficients(route, g, table, census));
}
BENCHMARK(BM_Route)->DenseRange(0, static_cast<int>(kAllRoutes.size()) - 1);

}  // namespace
