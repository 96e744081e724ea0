#include "mstpoly/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace mstpoly {

namespace {

// Measured single-thread kernel rate, used only for refusal messages.
constexpr double kSubsetsPerSecond = 8.0e6;

void require_open_unit_interval(const BigRational& t) {
  if (t.sign() <= 0 || t >= BigRational(1)) {
    throw std::domain_error("t = " + t.str() + " must lie strictly between 0 and 1");
  }
}

// Enumeration kernel. Only vertices touched by an edge take part in the
// union-find; there are at most 2 * kHardEdgeCap of them.
class SubsetCounter {
 public:
  explicit SubsetCounter(const Graph& g) : m_(g.m()) {
    std::vector<int> id(static_cast<std::size_t>(g.n()), -1);
    for (int e = 0; e < m_; ++e) {
      const Edge& edge = g.edge(e);
      for (int v : {edge.u, edge.v}) {
        if (id[static_cast<std::size_t>(v)] < 0) id[static_cast<std::size_t>(v)] = used_++;
      }
      u_[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(id[static_cast<std::size_t>(edge.u)]);
      v_[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(id[static_cast<std::size_t>(edge.v)]);
    }
    for (int i = 0; i < used_; ++i) identity_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  }

  void count(std::uint64_t first, std::uint64_t last, RankTable& out) const {
    // Local dense histogram, flushed into `out` once.
    const int ranks = used_ + 1;
    std::vector<std::uint64_t> hist(static_cast<std::size_t>((m_ + 1) * ranks), 0);
    std::array<std::uint8_t, kParentSlots> parent{};

    for (std::uint64_t mask = first; mask < last; ++mask) {
      std::copy_n(identity_.begin(), used_, parent.begin());
      int unions = 0;
      std::uint64_t bits = mask;
      while (bits != 0) {
        const int e = __builtin_ctzll(bits);
        bits &= bits - 1;
        std::uint8_t a = u_[static_cast<std::size_t>(e)];
        std::uint8_t b = v_[static_cast<std::size_t>(e)];
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        while (parent[b] != b) b = parent[b] = parent[parent[b]];
        if (a != b) {
          parent[a] = b;
          ++unions;
        }
      }
      ++hist[static_cast<std::size_t>(__builtin_popcountll(mask) * ranks + unions)];
    }

    for (int l = 0; l <= m_; ++l) {
      for (int r = 0; r < ranks; ++r) {
        const std::uint64_t c = hist[static_cast<std::size_t>(l * ranks + r)];
        if (c != 0) out.add(l, r, c);
      }
    }
  }

 private:
  static constexpr std::size_t kParentSlots = 2 * kHardEdgeCap + 2;

  int m_;
  int used_ = 0;
  std::array<std::uint8_t, kMaxEdges + 1> u_{};
  std::array<std::uint8_t, kMaxEdges + 1> v_{};
  std::array<std::uint8_t, kParentSlots> identity_{};
};

void check_cap(const Graph& g, const EnumerationOptions& options) {
  if (options.cap < 0 || options.cap > kHardEdgeCap) {
    throw std::invalid_argument("enumeration cap " + std::to_string(options.cap) + " outside 0.." +
                                std::to_string(kHardEdgeCap));
  }
  if (g.m() > options.cap) throw CapExceeded(g.m(), options.cap);
}

}  // namespace

CapExceeded::CapExceeded(int m, int cap)
    : std::runtime_error("refusing to enumerate 2^" + std::to_string(m) + " (about " +
                         std::to_string(static_cast<long long>(std::ldexp(1.0, m) / 1e6)) +
                         " million) subsets: m = " + std::to_string(m) + " exceeds the cap of " +
                         std::to_string(cap) + " edges; projected single-thread time about " +
                         std::to_string(static_cast<long long>(std::ldexp(1.0, m) / kSubsetsPerSecond)) + " s"),
      m_(m),
      cap_(cap) {}

double CapExceeded::subset_count() const noexcept { return std::ldexp(1.0, m_); }

double CapExceeded::projected_seconds() const noexcept { return subset_count() / kSubsetsPerSecond; }

RankTable::RankTable(int n, int m)
    : n_(n), m_(m), counts_(static_cast<std::size_t>((m + 1) * n), 0) {}

std::uint64_t RankTable::count(int edges, int rank) const noexcept {
  if (edges < 0 || edges > m_ || rank < 0 || rank >= n_) return 0;
  return counts_[static_cast<std::size_t>(edges * n_ + rank)];
}

void RankTable::add(int edges, int rank, std::uint64_t amount) {
  if (edges < 0 || edges > m_ || rank < 0 || rank >= n_) {
    throw std::out_of_range("rank table entry (" + std::to_string(edges) + ", " + std::to_string(rank) +
                            ") out of range");
  }
  counts_[static_cast<std::size_t>(edges * n_ + rank)] += amount;
}

BigInt RankTable::component_sum(int edges) const {
  BigInt sum = 0;
  for (int r = 0; r < n_; ++r) sum += BigInt(count(edges, r)) * (n_ - r);
  return sum;
}

BigInt RankTable::row_total(int edges) const {
  BigInt sum = 0;
  for (int r = 0; r < n_; ++r) sum += count(edges, r);
  return sum;
}

RankTable& RankTable::operator+=(const RankTable& other) {
  if (other.n_ != n_ || other.m_ != m_) throw std::invalid_argument("merging rank tables of different shapes");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

int r_min(int edges) {
  if (edges <= 0) return 0;
  // Largest r with binom(r, 2) < edges.
  int r = 1;
  while (static_cast<long long>(r + 1) * r / 2 < edges) ++r;
  return r;
}

RankTable build_rank_table_range(const Graph& g, std::uint64_t first, std::uint64_t last) {
  if (g.m() > kHardEdgeCap) throw CapExceeded(g.m(), kHardEdgeCap);
  const std::uint64_t total = std::uint64_t{1} << g.m();
  last = std::min(last, total);
  RankTable table(g.n(), g.m());
  if (first < last) SubsetCounter(g).count(first, last, table);
  return table;
}

RankTable build_rank_table(const Graph& g, const EnumerationOptions& options) {
  check_cap(g, options);
  const std::uint64_t total = std::uint64_t{1} << g.m();
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  if (total < (std::uint64_t{1} << 14)) threads = 1;

  const SubsetCounter counter(g);
  if (threads == 1) {
    RankTable table(g.n(), g.m());
    counter.count(0, total, table);
    return table;
  }

  // Contiguous chunks handed out dynamically; integer sums make the result
  // independent of which worker took which chunk.
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{threads} * 16);
  const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next{0};
  std::vector<RankTable> partial(threads, RankTable(g.n(), g.m()));
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
        const std::uint64_t lo = c * chunk_size;
        const std::uint64_t hi = std::min(total, lo + chunk_size);
        counter.count(lo, hi, partial[w]);
      }
    });
  }
  workers.clear();

  RankTable table(g.n(), g.m());
  for (const auto& p : partial) table += p;
  return table;
}

IntPolynomial direct_integrand(const RankTable& table) {
  if (!table.source_connected()) throw DisconnectedGraph();
  const int m = table.m();
  IntPolynomial p = IntPolynomial{-1};
  IntPolynomial one_minus_t{1, -1};
  // (1-t)^(m-l) built up from l = m downwards.
  IntPolynomial power{1};
  for (int l = m; l >= 0; --l) {
    BigInt weight = table.component_sum(l);
    if (!weight.is_zero()) p += IntPolynomial::monomial(weight, l) * power;
    power = power * one_minus_t;
  }
  return p;
}

IntPolynomial direct_integrand(const Graph& g, const EnumerationOptions& options) {
  if (!is_connected(g)) throw DisconnectedGraph();
  return direct_integrand(build_rank_table(g, options));
}

BivariatePolynomial tutte_from_rank_table(const RankTable& table, int graph_rank) {
  const int max_power = std::max(graph_rank, table.m()) + 1;
  std::vector<std::vector<BigInt>> pascal(static_cast<std::size_t>(max_power) + 1);
  for (int a = 0; a <= max_power; ++a) {
    auto& row = pascal[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(a) + 1);
    row.front() = row.back() = 1;
    for (int b = 1; b < a; ++b) {
      row[static_cast<std::size_t>(b)] =
          pascal[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          pascal[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
  }

  BivariatePolynomial tutte;
  for (int l = 0; l <= table.m(); ++l) {
    for (int r = 0; r < table.n(); ++r) {
      const std::uint64_t k = table.count(l, r);
      if (k == 0) continue;
      if (r > graph_rank) {
        throw std::invalid_argument("subgraph rank " + std::to_string(r) + " exceeds graph rank " +
                                    std::to_string(graph_rank));
      }
      const int xp = graph_rank - r;
      const int yp = l - r;
      for (int i = 0; i <= xp; ++i) {
        const BigInt xc = pascal[static_cast<std::size_t>(xp)][static_cast<std::size_t>(i)] * k;
        for (int j = 0; j <= yp; ++j) {
          BigInt c = xc * pascal[static_cast<std::size_t>(yp)][static_cast<std::size_t>(j)];
          if ((xp - i + yp - j) % 2 != 0) c = -c;
          tutte.add_term(i, j, c);
        }
      }
    }
  }
  return tutte;
}

HyperbolaVerdict check_tutte_hyperbola(const RankTable& table, const BigRational& t) {
  require_open_unit_interval(t);
  if (!table.source_connected()) throw DisconnectedGraph();
  const int n = table.n();
  const int m = table.m();
  const BigRational x = BigRational(1) / t;
  const BigRational y = BigRational(1) / (BigRational(1) - t);
  const BigRational xm1 = x - BigRational(1);
  const BigRational ratio_power = (x / xm1).pow(m);

  const BivariatePolynomial tutte = tutte_from_rank_table(table, n - 1);

  HyperbolaVerdict verdict;
  verdict.value_identity = tutte.eval(x, y) == xm1.pow(n - 1) * ratio_power;

  BigRational weighted;
  const BigRational ym1 = y - BigRational(1);
  BigRational ym1_power(1);
  for (int l = 0; l <= m; ++l) {
    weighted += BigRational(table.component_sum(l)) * ym1_power;
    ym1_power *= ym1;
  }
  verdict.partial_identity = tutte.partial_x().eval(x, y) == xm1.pow(n - 2) * (weighted - ratio_power);
  return verdict;
}

HyperbolaVerdict check_tutte_hyperbola(const Graph& g, const BigRational& t, const EnumerationOptions& options) {
  require_open_unit_interval(t);
  if (!is_connected(g)) throw DisconnectedGraph();
  return check_tutte_hyperbola(build_rank_table(g, options), t);
}

bool check_integrand_ratio(const RankTable& table, const BigRational& t) {
  require_open_unit_interval(t);
  if (!table.source_connected()) throw DisconnectedGraph();
  const BigRational one(1);
  const BigRational x = one / t;
  const BigRational y = one / (one - t);
  const BivariatePolynomial tutte = tutte_from_rank_table(table, table.n() - 1);
  const BigRational lhs =
      (one - t) / t * bivar_eval(bivar_partial_x(tutte), x, y) / bivar_eval(tutte, x, y);
  return lhs == poly_eval(direct_integrand(table), t);
}

bool check_integrand_ratio(const Graph& g, const BigRational& t, const EnumerationOptions& options) {
  require_open_unit_interval(t);
  if (!is_connected(g)) throw DisconnectedGraph();
  return check_integrand_ratio(build_rank_table(g, options), t);
}

}  // namespace mstpoly
