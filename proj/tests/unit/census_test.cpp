#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mstpoly/census.hpp"
#include "mstpoly/enumeration.hpp"
#include "oracles.hpp"

namespace mstpoly {
namespace {

void expect_matches_brute(const Graph& g, int max_len) {
  const SubgraphCensus c = take_census(g, max_len);
  const testing::BruteCensus b = testing::brute_census(g, c.max_len);
  for (int i = 3; i <= c.max_len; ++i) EXPECT_EQ(c.cycle(i), b.cycles[static_cast<std::size_t>(i)]) << "c" << i;
  EXPECT_EQ(c.chorded4, b.chorded4);
  EXPECT_EQ(c.chorded5, b.chorded5);
  EXPECT_EQ(c.cbar41, b.cbar41);
  EXPECT_EQ(c.k4, b.k4);
  EXPECT_EQ(c.k32, b.k32);
}

TEST(Census, CompleteFour) {
  const SubgraphCensus c = take_census(complete_graph(4));
  EXPECT_EQ(c.cycle(3), 4u);
  EXPECT_EQ(c.cycle(4), 3u);
  EXPECT_EQ(c.cycle(5), 0u);
  EXPECT_EQ(c.chorded4, 6u);
  EXPECT_EQ(c.cbar41, 0u);
  EXPECT_EQ(c.k4, 1u);
  EXPECT_EQ(c.k32, 0u);
}

TEST(Census, CompleteFive) {
  const SubgraphCensus c = take_census(complete_graph(5));
  EXPECT_EQ(c.cycle(3), 10u);
  EXPECT_EQ(c.cycle(4), 15u);
  EXPECT_EQ(c.cycle(5), 12u);
  EXPECT_EQ(c.cycle(6), 0u);
  EXPECT_EQ(c.chorded4, 30u);
  EXPECT_EQ(c.chorded5, 60u);
  EXPECT_EQ(c.k4, 5u);
  EXPECT_EQ(c.k32, 10u);
  // Each 4-cycle has both diagonals and m - 6 = 4 other edges.
  EXPECT_EQ(c.cbar41, 15u * 2 * 4);
}

TEST(Census, CompleteBipartiteThreeTwo) {
  const SubgraphCensus c = take_census(complete_bipartite_graph(3, 2));
  EXPECT_EQ(c.cycle(3), 0u);
  EXPECT_EQ(c.cycle(4), 3u);
  EXPECT_EQ(c.cycle(5), 0u);
  EXPECT_EQ(c.chorded4, 0u);
  EXPECT_EQ(c.k32, 1u);
}

TEST(Census, CycleGraphs) {
  for (int n = 3; n <= 10; ++n) {
    const SubgraphCensus c = take_census(cycle_graph(n), 10);
    for (int i = 3; i <= 10; ++i) EXPECT_EQ(c.cycle(i), i == n ? 1u : 0u) << n << " " << i;
  }
}

TEST(Census, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 3 + trial % 6, 20);
    expect_matches_brute(g, 7);
  }
  expect_matches_brute(complete_graph(7), 7);
}

TEST(Census, InvariantUnderRelabelling) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 7, 16);
    EXPECT_EQ(take_census(g, 7), take_census(testing::relabel(g, rng), 7));
  }
}

TEST(Census, ChordedFourCycleIdentities) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 4 + trial % 4, 18);
    const SubgraphCensus c = take_census(g);
    // A 4-cycle with p present diagonals contributes p(m-4-p); sum p^2 counts
    // both-diagonal cycles twice more, and there are three of them per K_4.
    const std::int64_t m = g.m();
    EXPECT_EQ(static_cast<std::int64_t>(c.cbar41),
              (m - 5) * static_cast<std::int64_t>(c.chorded4) - 6 * static_cast<std::int64_t>(c.k4));
    EXPECT_EQ(diamond_count(g), c.chorded4);
    EXPECT_EQ(diamond_count(g), testing::brute_rank3_five_edge_subsets(g));
    EXPECT_EQ(build_rank_table(g).count(5, 3), c.chorded4);
  }
}

TEST(Census, EnumeratesEachCycleOnceCanonically) {
  std::multiset<std::vector<int>> seen;
  for_each_cycle(complete_graph(5), 3, 5, [&](std::span<const int> cyc) {
    EXPECT_EQ(cyc.front(), *std::min_element(cyc.begin(), cyc.end()));
    EXPECT_LT(cyc[1], cyc.back());
    seen.emplace(cyc.begin(), cyc.end());
  });
  EXPECT_EQ(seen.size(), 10u + 15u + 12u);
  EXPECT_EQ(std::set<std::vector<int>>(seen.begin(), seen.end()).size(), seen.size());
}

TEST(Census, LengthLimits) {
  EXPECT_THROW(count_cycles(complete_graph(4), 2), std::invalid_argument);
  const auto counts = count_cycles(complete_graph(4), 9);
  EXPECT_EQ(counts.at(9), 0u);
  const SubgraphCensus c = take_census(complete_graph(4), 3);
  EXPECT_EQ(c.max_len, 6);
  EXPECT_EQ(c.cycle(2), 0u);
  EXPECT_THROW(c.cycle(7), std::out_of_range);
  EXPECT_THROW(count_chorded_cycles(complete_graph(4), 6), std::invalid_argument);
}

}  // namespace
}  // namespace mstpoly
