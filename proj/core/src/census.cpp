#include "mstpoly/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstpoly {

namespace {

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g)
      : n_(g.n()), bits_(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n()), 0) {
    for (const auto& e : g.edges()) {
      bits_[index(e.u, e.v)] = 1;
      bits_[index(e.v, e.u)] = 1;
    }
  }
  bool operator()(int u, int v) const { return bits_[index(u, v)] != 0; }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  int n_;
  std::vector<std::uint8_t> bits_;
};

int chords_present(const AdjacencyMatrix& adj, std::span<const int> cycle) {
  const int len = static_cast<int>(cycle.size());
  int count = 0;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (adj(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)])) ++count;
    }
  }
  return count;
}

std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) * (k - 2) / 6; }

}  // namespace

std::uint64_t SubgraphCensus::cycle(int i) const {
  if (i < 3) return 0;
  if (i > max_len) throw std::out_of_range("census holds cycle counts only up to length " + std::to_string(max_len));
  auto it = cycles.find(i);
  return it == cycles.end() ? 0 : it->second;
}

void for_each_cycle(const Graph& g, int min_len, int max_len,
                    const std::function<void(std::span<const int>)>& visit) {
  min_len = std::max(min_len, 3);
  if (max_len < min_len) return;
  const auto adj_lists = g.adjacency_lists();
  const AdjacencyMatrix adj(g);
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);

  std::function<void(int)> extend = [&](int start) {
    const int v = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= min_len && adj(v, start) && path[1] < path.back()) visit(path);
    if (len == max_len) return;
    for (int w : adj_lists[static_cast<std::size_t>(v)]) {
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (int s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
}

std::map<int, std::uint64_t> count_cycles(const Graph& g, int max_len) {
  if (max_len < 3) throw std::invalid_argument("count_cycles: max_len must be at least 3");
  std::map<int, std::uint64_t> counts;
  for (int i = 3; i <= max_len; ++i) counts[i] = 0;
  for_each_cycle(g, 3, max_len, [&](std::span<const int> c) { ++counts[static_cast<int>(c.size())]; });
  return counts;
}

std::uint64_t count_chorded_cycles(const Graph& g, int length) {
  if (length != 4 && length != 5) throw std::invalid_argument("count_chorded_cycles: length must be 4 or 5");
  const AdjacencyMatrix adj(g);
  std::uint64_t total = 0;
  for_each_cycle(g, length, length, [&](std::span<const int> c) { total += static_cast<std::uint64_t>(chords_present(adj, c)); });
  return total;
}

std::uint64_t count_cbar41(const Graph& g) {
  const AdjacencyMatrix adj(g);
  const auto m = static_cast<std::uint64_t>(g.m());
  std::uint64_t total = 0;
  for_each_cycle(g, 4, 4, [&](std::span<const int> c) {
    // Each present diagonal pairs with every edge that is neither on the
    // cycle nor one of its two diagonals.
    const auto diagonals = static_cast<std::uint64_t>(chords_present(adj, c));
    total += diagonals * (m - 4 - diagonals);
  });
  return total;
}

std::uint64_t count_k4(const Graph& g) {
  const AdjacencyMatrix adj(g);
  const int n = g.n();
  std::uint64_t total = 0;
  for (const auto& e : g.edges()) {
    // Enumerate each K_4 once from its two smallest vertices.
    for (int w = e.v + 1; w < n; ++w) {
      if (!adj(e.u, w) || !adj(e.v, w)) continue;
      for (int x = w + 1; x < n; ++x) {
        if (adj(e.u, x) && adj(e.v, x) && adj(w, x)) ++total;
      }
    }
  }
  return total;
}

std::uint64_t count_k32(const Graph& g) {
  const AdjacencyMatrix adj(g);
  const int n = g.n();
  std::uint64_t total = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      std::uint64_t common = 0;
      for (int w = 0; w < n; ++w) {
        if (adj(p, w) && adj(q, w)) ++common;
      }
      total += choose3(common);
    }
  }
  return total;
}

std::uint64_t diamond_count(const Graph& g) { return count_chorded_cycles(g, 4); }

SubgraphCensus take_census(const Graph& g, int max_len) {
  SubgraphCensus census;
  census.max_len = std::max(max_len, 6);
  census.cycles = count_cycles(g, census.max_len);
  census.chorded4 = count_chorded_cycles(g, 4);
  census.chorded5 = count_chorded_cycles(g, 5);
  census.cbar41 = count_cbar41(g);
  census.k4 = count_k4(g);
  census.k32 = count_k32(g);
  return census;
}

}  // namespace mstpoly
