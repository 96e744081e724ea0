#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mstpoly {

/// Edge subsets are one machine word, so a graph may hold at most 63 edges.
inline constexpr int kMaxEdges = 63;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bitmask over the edge indices of one graph: bit i set means edge i is in
/// the spanning subgraph.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int edge) const noexcept { return (bits_ >> edge) & 1U; }
  constexpr int size() const noexcept { return __builtin_popcountll(bits_); }
  constexpr EdgeSubset with(int edge) const noexcept { return EdgeSubset(bits_ | (std::uint64_t{1} << edge)); }
  constexpr bool is_subset_of(EdgeSubset other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Thrown when a vertex/edge list violates the simple-graph invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple graph on vertices 0..n-1 with a stable edge indexing.
/// Every stored edge has u < v.
class Graph {
 public:
  /// Validates and normalizes (u, v) to u < v, keeping the given order.
  /// Throws GraphError on self-loops, duplicates, out-of-range vertices, or
  /// more than kMaxEdges edges.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  EdgeSubset full_subset() const noexcept;
  bool is_valid(EdgeSubset a) const noexcept { return a.is_subset_of(full_subset()); }

  /// Index of edge {u, v}, or -1.
  int find_edge(int u, int v) const noexcept;
  bool adjacent(int u, int v) const noexcept { return find_edge(u, v) >= 0; }
  std::vector<std::vector<int>> adjacency_lists() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kTooManyEdges,
  kEdgeCountMismatch,
};

/// Edge-list parse failure; `line()` is the 1-based physical line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message);
  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Parses the edge-list format: '#' comment lines, a header "n m", then
/// exactly m lines "u v". Edges keep file order.
Graph parse_graph(std::string_view text);

/// Renders `g` in the edge-list format accepted by parse_graph.
std::string format_graph(const Graph& g);

enum class GraphKind { kComplete, kBipartite, kCycle, kPath };

struct GeneratorSpec {
  GraphKind kind = GraphKind::kComplete;
  std::vector<int> params;
};

/// Parses e.g. {"bipartite", "3", "2"}. Throws std::invalid_argument.
GeneratorSpec parse_generator_spec(std::span<const std::string> words);
std::string kind_name(GraphKind kind);

/// Canonical labelings:
///  complete n:    edges (i, j), i < j, lexicographic.
///  bipartite a b: parts {0..a-1} and {a..a+b-1}; edges (i, a+j) lexicographic.
///  cycle n:       edges (i, i+1) for i < n-1, then (0, n-1); needs n >= 3.
///  path n:        edges (i, i+1); path 1 is a single vertex.
/// Throws GraphError when the result would exceed kMaxEdges (complete n <= 11).
Graph generate(const GeneratorSpec& spec);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Number of connected components of the spanning subgraph, isolated
/// vertices included.
int component_count(const Graph& g, EdgeSubset a);
/// n - component_count(g, a).
int rank(const Graph& g, EdgeSubset a);
bool is_connected(const Graph& g);

}  // namespace mstpoly
