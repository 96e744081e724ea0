#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "mstpoly/graph.hpp"

namespace mstpoly {

/// Structural counts used by the low-order coefficient formulas.
///
/// "Cycle with one chord" is counted as (cycle, chord) pairs: a 4-cycle whose
/// two diagonals are both present contributes 2 to c_{4,1}.
struct SubgraphCensus {
  int max_len = 0;                        ///< c_i is known for 3 <= i <= max_len
  std::map<int, std::uint64_t> cycles;    ///< i -> c_i
  std::uint64_t chorded4 = 0;             ///< c_{4,1}; also the diamond count
  std::uint64_t chorded5 = 0;             ///< c_{5,1}
  std::uint64_t cbar41 = 0;               ///< (4-cycle, chord, extra non-chord edge) triples
  std::uint64_t k4 = 0;                   ///< complete K_4 subgraphs
  std::uint64_t k32 = 0;                  ///< complete bipartite K_{3,2} subgraphs

  /// c_i; zero for i < 3. Throws std::out_of_range for i > max_len.
  std::uint64_t cycle(int i) const;
  friend bool operator==(const SubgraphCensus&, const SubgraphCensus&) = default;
};

/// Visits every simple cycle with min_len <= length <= max_len exactly once.
/// The vertex sequence starts at the cycle's smallest vertex and runs in the
/// direction whose second vertex is smaller than its last.
void for_each_cycle(const Graph& g, int min_len, int max_len,
                    const std::function<void(std::span<const int>)>& visit);

/// c_i for 3 <= i <= max_len. Throws std::invalid_argument for max_len < 3;
/// lengths above n simply count zero.
std::map<int, std::uint64_t> count_cycles(const Graph& g, int max_len);

/// c_{i,1} for i in {4, 5}: (i-cycle, chord) pairs with the chord an edge of g.
std::uint64_t count_chorded_cycles(const Graph& g, int length);
std::uint64_t count_cbar41(const Graph& g);
std::uint64_t count_k4(const Graph& g);
/// (3-set, 2-set) vertex pairs with all six cross edges present.
std::uint64_t count_k32(const Graph& g);
/// 4-cycles with one chord; equals count_chorded_cycles(g, 4).
std::uint64_t diamond_count(const Graph& g);

/// Full census with cycles counted up to max_len (at least 6).
SubgraphCensus take_census(const Graph& g, int max_len = 6);

}  // namespace mstpoly
