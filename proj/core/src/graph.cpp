#include "mstpoly/graph.hpp"

#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace mstpoly {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view word, long long& out) {
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc() && ptr == word.data() + word.size();
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw GraphError("graph needs at least one vertex");
  if (m() > kMaxEdges) {
    throw GraphError("graph has " + std::to_string(m()) + " edges; at most " + std::to_string(kMaxEdges) +
                     " are supported");
  }
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has a vertex outside 0.." +
                       std::to_string(n_ - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
  }
}

EdgeSubset Graph::full_subset() const noexcept {
  return EdgeSubset(m() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m()) - 1);
}

int Graph::find_edge(int u, int v) const noexcept {
  if (u > v) std::swap(u, v);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == u && edges_[i].v == v) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

Graph parse_graph(std::string_view text) {
  long long n = -1;
  long long m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (n < 0) {
      header_line = line_no;
      if (words.size() != 2 || !parse_int(words[0], n) || !parse_int(words[1], m) || n < 1 || m < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "expected header \"n m\" with n >= 1, m >= 0");
      }
      if (m > kMaxEdges) {
        throw ParseError(ParseErrorKind::kTooManyEdges, line_no,
                         "m = " + std::to_string(m) + " exceeds the limit of " + std::to_string(kMaxEdges) + " edges");
      }
    } else {
      if (static_cast<long long>(edges.size()) == m) {
        throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                         "more edge lines than the " + std::to_string(m) + " declared");
      }
      long long u = 0;
      long long v = 0;
      if (words.size() != 2 || !parse_int(words[0], u) || !parse_int(words[1], v)) {
        throw ParseError(ParseErrorKind::kMalformedEdge, line_no, "expected edge \"u v\"");
      }
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "vertex index out of range 0.." + std::to_string(n - 1));
      }
      if (u == v) throw ParseError(ParseErrorKind::kSelfLoop, line_no, "self-loop on vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second) {
        throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (end == text.size()) break;
  }

  if (n < 0) throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, header_line,
                     "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                         " were listed");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::kComplete: return "complete";
    case GraphKind::kBipartite: return "bipartite";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kPath: return "path";
  }
  return "?";
}

GeneratorSpec parse_generator_spec(std::span<const std::string> words) {
  if (words.empty()) throw std::invalid_argument("generator spec is empty");
  GeneratorSpec spec;
  std::size_t arity = 1;
  const std::string& kind = words[0];
  if (kind == "complete") {
    spec.kind = GraphKind::kComplete;
  } else if (kind == "bipartite") {
    spec.kind = GraphKind::kBipartite;
    arity = 2;
  } else if (kind == "cycle") {
    spec.kind = GraphKind::kCycle;
  } else if (kind == "path") {
    spec.kind = GraphKind::kPath;
  } else {
    throw std::invalid_argument("unknown generator kind \"" + kind + "\" (complete|bipartite|cycle|path)");
  }
  if (words.size() != arity + 1) {
    throw std::invalid_argument("generator \"" + kind + "\" takes " + std::to_string(arity) + " size parameter(s)");
  }
  for (std::size_t i = 1; i < words.size(); ++i) {
    long long v = 0;
    if (!parse_int(words[i], v) || v < 1 || v > 1000) {
      throw std::invalid_argument("generator size \"" + words[i] + "\" must be an integer >= 1");
    }
    spec.params.push_back(static_cast<int>(v));
  }
  return spec;
}

Graph generate(const GeneratorSpec& spec) {
  auto need = [&](std::size_t k) {
    if (spec.params.size() != k) throw std::invalid_argument(kind_name(spec.kind) + " takes " + std::to_string(k) + " parameter(s)");
    for (int p : spec.params) {
      if (p < 1) throw std::invalid_argument("generator sizes must be >= 1");
    }
  };
  auto check_edges = [&](long long m) {
    if (m > kMaxEdges) {
      throw GraphError(kind_name(spec.kind) + " graph would have " + std::to_string(m) + " edges; at most " +
                       std::to_string(kMaxEdges) + " are supported");
    }
  };

  std::vector<Edge> edges;
  switch (spec.kind) {
    case GraphKind::kComplete: {
      need(1);
      const long long n = spec.params[0];
      check_edges(n * (n - 1) / 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return Graph(static_cast<int>(n), std::move(edges));
    }
    case GraphKind::kBipartite: {
      need(2);
      const int a = spec.params[0];
      const int b = spec.params[1];
      check_edges(static_cast<long long>(a) * b);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
      return Graph(a + b, std::move(edges));
    }
    case GraphKind::kCycle: {
      need(1);
      const int n = spec.params[0];
      if (n < 3) throw GraphError("a simple cycle needs at least 3 vertices");
      check_edges(n);
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      return Graph(n, std::move(edges));
    }
    case GraphKind::kPath: {
      need(1);
      const int n = spec.params[0];
      check_edges(n - 1);
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Graph(n, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

Graph complete_graph(int n) { return generate({GraphKind::kComplete, {n}}); }
Graph complete_bipartite_graph(int a, int b) { return generate({GraphKind::kBipartite, {a, b}}); }
Graph cycle_graph(int n) { return generate({GraphKind::kCycle, {n}}); }
Graph path_graph(int n) { return generate({GraphKind::kPath, {n}}); }

int component_count(const Graph& g, EdgeSubset a) {
  UnionFind uf(g.n());
  int components = g.n();
  std::uint64_t bits = a.bits();
  while (bits != 0) {
    const int e = __builtin_ctzll(bits);
    bits &= bits - 1;
    const Edge& edge = g.edge(e);
    if (uf.unite(edge.u, edge.v)) --components;
  }
  return components;
}

int rank(const Graph& g, EdgeSubset a) { return g.n() - component_count(g, a); }

bool is_connected(const Graph& g) { return component_count(g, g.full_subset()) == 1; }

}  // namespace mstpoly
