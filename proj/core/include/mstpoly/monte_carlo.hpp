#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "mstpoly/graph.hpp"
#include "mstpoly/rational.hpp"

namespace mstpoly {

/// Sample statistics of L(G) over independent uniform weight draws.
/// Identical (graph, trials, seed) reproduce every field bit-for-bit,
/// whatever the worker count.
struct McEstimate {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double standard_error = 0.0;  ///< sample standard deviation / sqrt(trials)
  double min = 0.0;
  double max = 0.0;
  std::string generator_id;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Uniform [0,1) weight of every edge in trial `trial`; the stream is a pure
/// function of (seed, trial).
void draw_weights(std::uint64_t seed, std::uint64_t trial, std::span<double> weights);

/// Kruskal MST weight: edges sorted by (weight, index), joined greedily.
/// Throws DisconnectedGraph when no spanning tree exists.
double mst_length(const Graph& g, std::span<const double> weights);

/// Throws DisconnectedGraph, or std::invalid_argument for zero trials.
/// threads = 0 picks std::thread::hardware_concurrency().
McEstimate simulate(const Graph& g, std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

struct McComparison {
  double exact = 0.0;
  double abs_error = 0.0;
  double z = 0.0;  ///< |mean - exact| in standard errors
  double threshold = 4.0;
  bool pass = false;
};

McComparison compare(const BigRational& exact, const McEstimate& estimate, double z_threshold = 4.0);

}  // namespace mstpoly
