#include <random>

#include <gtest/gtest.h>

#include "mstpoly/coefficients.hpp"
#include "oracles.hpp"

namespace mstpoly {
namespace {

struct Prepared {
  Graph g;
  RankTable table;
  SubgraphCensus census;
};

Prepared prepare(const Graph& g) { return {g, build_rank_table(g), take_census(g)}; }

TEST(Routes, Names) {
  for (Route r : kAllRoutes) EXPECT_EQ(parse_route(route_name(r)), r);
  EXPECT_EQ(route_name(Route::kReduced), "reduced");
  EXPECT_THROW(parse_route("fourier"), std::invalid_argument);
}

TEST(Routes, CompleteBipartiteThreeTwo) {
  const Prepared p = prepare(complete_bipartite_graph(3, 2));
  const RouteCoefficients rc = all_routes(p.g, p.table, p.census);
  const std::vector<long long> expected{5, -6, 0, 0, 3, 0, -1};
  for (Route r : {Route::kDirect, Route::kAlternating, Route::kRank}) {
    const CoefficientVector& v = rc.get(r);
    ASSERT_EQ(v.a.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(v.a[i], BigInt(expected[i])) << route_name(r) << i;
  }
  EXPECT_FALSE(rc.reduced.a[2].has_value());
  EXPECT_EQ(rc.reduced.a[4], BigInt(3));
  EXPECT_EQ(rc.structural.a[6], BigInt(-1));
  EXPECT_TRUE(route_disagreements(rc).empty());
}

TEST(Routes, AgreeOnRandomGraphs) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const Prepared p = prepare(testing::random_connected_graph(rng, 3 + trial % 5, 16));
    const RouteCoefficients rc = all_routes(p.g, p.table, p.census);
    const auto bad = route_disagreements(rc);
    EXPECT_TRUE(bad.empty()) << format_graph(p.g) << (bad.empty() ? "" : bad.front());
    ASSERT_EQ(rc.direct.a.size(), static_cast<std::size_t>(p.g.m()) + 1);
    for (Route r : kAllRoutes) {
      const CoefficientVector& v = rc.get(r);
      for (std::size_t i = 0; i < v.a.size(); ++i) {
        const bool defined = (r != Route::kReduced || i >= 3) && (r != Route::kStructural || i <= 6);
        EXPECT_EQ(v.a[i].has_value(), defined) << route_name(r) << " " << i;
      }
    }
  }
}

TEST(Routes, LowOrderAndSum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Prepared p = prepare(testing::random_connected_graph(rng, 2 + trial % 6, 14));
    const CoefficientVector v = route_coefficients(Route::kAlternating, p.g, p.table, p.census);
    EXPECT_EQ(*v.a[0], p.g.n());
    EXPECT_EQ(*v.a[1], -p.g.m());
    if (p.g.m() >= 2) EXPECT_EQ(*v.a[2], 0);
    BigInt sum = 0;
    for (const auto& a : v.a) sum += *a;
    EXPECT_EQ(sum, 1);
  }
}

TEST(Routes, TreesHaveOnlyLinearTerms) {
  std::mt19937_64 rng(19);
  for (int n = 2; n <= 12; ++n) {
    const Prepared p = prepare(testing::random_tree(rng, n));
    const RouteCoefficients rc = all_routes(p.g, p.table, p.census);
    EXPECT_TRUE(route_disagreements(rc).empty());
    for (std::size_t i = 2; i < rc.direct.a.size(); ++i) EXPECT_EQ(*rc.direct.a[i], 0);
  }
}

TEST(Routes, IndexErrors) {
  const Prepared p = prepare(complete_graph(4));
  EXPECT_THROW(coeff_alternating(p.g, p.table, -1), std::out_of_range);
  EXPECT_THROW(coeff_alternating(p.g, p.table, 7), std::out_of_range);
  EXPECT_THROW(coeff_rank(p.g, p.table, 7), std::out_of_range);
  EXPECT_THROW(coeff_reduced(p.g, p.table, 2), std::invalid_argument);
  EXPECT_THROW(coeff_reduced(p.g, p.table, 7), std::out_of_range);
  EXPECT_THROW(coeff_structural(p.g, p.census, 7), std::invalid_argument);
  EXPECT_THROW(check_correction_identity(p.g, p.table, p.census, 7), std::invalid_argument);
  EXPECT_THROW(check_cycle_correction(p.g, p.table, p.census, 2), std::invalid_argument);
}

TEST(Corrections, Values) {
  const SubgraphCensus k5 = take_census(complete_graph(5));
  const DCorrections d = d_corrections(k5);
  EXPECT_EQ(d.at(3), 0);
  EXPECT_EQ(d.at(4), 0);
  EXPECT_EQ(d.at(5), 30);
  // cbar41 + c51 + k32 + 4 k4 = 120 + 60 + 10 + 20.
  EXPECT_EQ(d.at(6), 210);
  EXPECT_THROW(d.at(7), std::out_of_range);
}

TEST(Corrections, IdentityAgainstRankTable) {
  std::mt19937_64 rng(88);
  std::vector<Graph> graphs{complete_graph(5), complete_graph(6), complete_bipartite_graph(3, 3)};
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(testing::random_connected_graph(rng, 4 + trial % 4, 18));
  for (const Graph& g : graphs) {
    const Prepared p = prepare(g);
    for (int l = 3; l <= std::min(6, g.m()); ++l) {
      const CorrectionIdentityReport r = check_correction_identity(g, p.table, p.census, l);
      EXPECT_TRUE(r.holds) << format_graph(g) << " l=" << l << " " << r.lhs << " vs " << r.rhs;
      EXPECT_EQ(r.lhs, r.rhs);
    }
  }
}

TEST(CycleIdentity, HoldsThroughSix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Prepared p = prepare(testing::random_connected_graph(rng, 4 + trial % 4, 18));
    for (int i = 3; i <= std::min(6, p.g.m()); ++i) {
      EXPECT_TRUE(cycle_identity(p.g, p.census, i).holds);
      EXPECT_TRUE(check_cycle_correction(p.g, p.table, p.census, i));
    }
  }
}

TEST(Structural, ClosedFormsOnExamples) {
  const Prepared k4 = prepare(complete_graph(4));
  EXPECT_EQ(coeff_structural(k4.g, k4.census, 3), 4);
  EXPECT_EQ(coeff_structural(k4.g, k4.census, 4), 3);
  EXPECT_EQ(coeff_structural(k4.g, k4.census, 5), -6);
  EXPECT_EQ(coeff_structural(k4.g, k4.census, 6), 2);
  const Prepared c5 = prepare(cycle_graph(5));
  EXPECT_EQ(coeff_structural(c5.g, c5.census, 5), 1);
  EXPECT_EQ(coeff_alternating(c5.g, c5.table, 5), 1);
}

}  // namespace
}  // namespace mstpoly
