#include <benchmark/benchmark.h>

#include "mstpoly/census.hpp"

namespace {

using namespace mstpoly;

void BM_CensusComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(take_census(g));
}
BENCHMARK(BM_CensusComplete)->DenseRange(6, 10, 2);

void BM_CountCyclesLong(benchmark::State& state) {
  const Graph g = complete_graph(9);
  for (auto _ : state) benchmark::DoNotOptimize(count_cycles(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountCyclesLong)->Arg(6)->Arg(8);

}  // namespace
