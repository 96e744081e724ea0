#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mstpoly/graph.hpp"
#include "mstpoly/polynomial.hpp"
#include "mstpoly/rational.hpp"

namespace mstpoly {

inline constexpr int kDefaultEdgeCap = 28;
inline constexpr int kHardEdgeCap = 40;

struct EnumerationOptions {
  /// Largest edge count we agree to enumerate (2^cap subsets). At most kHardEdgeCap.
  int cap = kDefaultEdgeCap;
  /// Worker count; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Refusal to enumerate 2^m subsets for m above the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int m, int cap);
  int m() const noexcept { return m_; }
  int cap() const noexcept { return cap_; }
  double subset_count() const noexcept;
  /// Rough single-thread wall time at the measured kernel throughput.
  double projected_seconds() const noexcept;

 private:
  int m_;
  int cap_;
};

/// The operation needs a connected graph.
class DisconnectedGraph : public std::invalid_argument {
 public:
  DisconnectedGraph() : std::invalid_argument("graph is not connected") {}
};

/// k_r^l: number of spanning subgraphs with l edges and rank r (n - r
/// components), for 0 <= l <= m and 0 <= r <= n-1.
///
/// Counts are held in 64-bit words, which is exact for every table we can
/// build: the total over a table is 2^m with m <= kHardEdgeCap.
class RankTable {
 public:
  RankTable(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  /// Zero outside the stored range.
  std::uint64_t count(int edges, int rank) const noexcept;
  void add(int edges, int rank, std::uint64_t amount);

  /// sum over S_l of k(A), i.e. sum_r k_r^l * (n - r).
  BigInt component_sum(int edges) const;
  /// sum_r k_r^l, which must equal binom(m, l).
  BigInt row_total(int edges) const;
  /// The full edge set is one component.
  bool source_connected() const noexcept { return count(m_, n_ - 1) == 1; }

  RankTable& operator+=(const RankTable& other);
  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  int n_;
  int m_;
  std::vector<std::uint64_t> counts_;  // row-major [edges][rank]
};

/// Smallest rank an l-edge simple graph can have: the largest r with
/// binom(r, 2) < l, and 0 for l = 0.
int r_min(int edges);

/// Enumerates all 2^m edge subsets once. Throws CapExceeded above the cap and
/// std::invalid_argument for a cap beyond kHardEdgeCap.
RankTable build_rank_table(const Graph& g, const EnumerationOptions& options = {});

/// Counts only the subsets whose bitmask lies in [first, last). Summing the
/// tables of a partition of [0, 2^m) reproduces build_rank_table exactly.
RankTable build_rank_table_range(const Graph& g, std::uint64_t first, std::uint64_t last);

/// The full integrand p(t) = sum_A k(A) t^|A| (1-t)^(m-|A|) - 1, so p(0) = n - 1.
/// Throws DisconnectedGraph.
IntPolynomial direct_integrand(const RankTable& table);
IntPolynomial direct_integrand(const Graph& g, const EnumerationOptions& options = {});

/// Whitney rank expansion sum k_r^l (x-1)^(graph_rank - r) (y-1)^(l - r).
BivariatePolynomial tutte_from_rank_table(const RankTable& table, int graph_rank);

struct HyperbolaVerdict {
  bool value_identity = false;    // T on the hyperbola (x-1)(y-1) = 1
  bool partial_identity = false;  // T_x on the same hyperbola
  friend bool operator==(const HyperbolaVerdict&, const HyperbolaVerdict&) = default;
};

/// Checks both closed forms of T and T_x at x = 1/t, y = 1/(1-t) exactly.
/// Throws std::domain_error unless 0 < t < 1, DisconnectedGraph for a
/// disconnected source.
HyperbolaVerdict check_tutte_hyperbola(const RankTable& table, const BigRational& t);
HyperbolaVerdict check_tutte_hyperbola(const Graph& g, const BigRational& t, const EnumerationOptions& options = {});

/// ((1-t)/t) T_x / T at (1/t, 1/(1-t)) against p(t), exactly.
bool check_integrand_ratio(const RankTable& table, const BigRational& t);
bool check_integrand_ratio(const Graph& g, const BigRational& t, const EnumerationOptions& options = {});

}  // namespace mstpoly
