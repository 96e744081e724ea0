#include "mstpoly/monte_carlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "mstpoly/enumeration.hpp"
#include "mstpoly/philox.hpp"

namespace mstpoly {

namespace {

// Trials are grouped in fixed blocks; block statistics are merged in a
// fixed pairwise order, which keeps the result independent of threading.
constexpr std::uint64_t kBlockTrials = 4096;

struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void push(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
    min = std::min(min, x);
    max = std::max(max, x);
  }

  static Moments merge(const Moments& a, const Moments& b) {
    if (a.count == 0.0) return b;
    if (b.count == 0.0) return a;
    Moments out;
    out.count = a.count + b.count;
    const double delta = b.mean - a.mean;
    out.mean = a.mean + delta * (b.count / out.count);
    out.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / out.count);
    out.min = std::min(a.min, b.min);
    out.max = std::max(a.max, b.max);
    return out;
  }
};

Moments pairwise(std::span<const Moments> blocks) {
  if (blocks.empty()) return {};
  if (blocks.size() == 1) return blocks.front();
  const std::size_t half = blocks.size() / 2;
  return Moments::merge(pairwise(blocks.first(half)), pairwise(blocks.subspan(half)));
}

class Kruskal {
 public:
  explicit Kruskal(const Graph& g) : g_(g), order_(static_cast<std::size_t>(g.m())), parent_(static_cast<std::size_t>(g.n())) {}

  double operator()(std::span<const double> w) {
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      const double wa = w[static_cast<std::size_t>(a)];
      const double wb = w[static_cast<std::size_t>(b)];
      return wa < wb || (wa == wb && a < b);
    });
    std::iota(parent_.begin(), parent_.end(), 0);
    double total = 0.0;
    int joined = 0;
    for (int e : order_) {
      const Edge& edge = g_.edge(e);
      int a = find(edge.u);
      int b = find(edge.v);
      if (a == b) continue;
      parent_[static_cast<std::size_t>(a)] = b;
      total += w[static_cast<std::size_t>(e)];
      if (++joined == g_.n() - 1) break;
    }
    if (joined != g_.n() - 1) throw DisconnectedGraph();
    return total;
  }

 private:
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  const Graph& g_;
  std::vector<int> order_;
  std::vector<int> parent_;
};

}  // namespace

void draw_weights(std::uint64_t seed, std::uint64_t trial, std::span<double> weights) {
  const Philox4x32 gen(seed);
  for (std::size_t i = 0; i < weights.size(); i += 2) {
    const auto block = static_cast<std::uint32_t>(i / 2);
    const auto out = gen({block, 0U, static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)});
    weights[i] = Philox4x32::to_unit(out[0], out[1]);
    if (i + 1 < weights.size()) weights[i + 1] = Philox4x32::to_unit(out[2], out[3]);
  }
}

double mst_length(const Graph& g, std::span<const double> weights) {
  if (weights.size() != static_cast<std::size_t>(g.m())) throw std::invalid_argument("one weight per edge required");
  return Kruskal(g)(weights);
}

McEstimate simulate(const Graph& g, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("simulate needs at least one trial");
  if (!is_connected(g)) throw DisconnectedGraph();

  const std::uint64_t block_count = (trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<Moments> blocks(block_count);

  auto run_block = [&](std::uint64_t b, Kruskal& mst, std::vector<double>& w) {
    Moments acc;
    const std::uint64_t lo = b * kBlockTrials;
    const std::uint64_t hi = std::min(trials, lo + kBlockTrials);
    for (std::uint64_t t = lo; t < hi; ++t) {
      draw_weights(seed, t, w);
      acc.push(mst(w));
    }
    blocks[b] = acc;
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, block_count));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    Kruskal mst(g);
    std::vector<double> w(static_cast<std::size_t>(g.m()));
    for (std::uint64_t b = next.fetch_add(1); b < block_count; b = next.fetch_add(1)) run_block(b, mst, w);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  const Moments total = pairwise(blocks);
  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.mean = total.mean;
  est.standard_error = trials > 1 ? std::sqrt(total.m2 / (total.count - 1.0)) / std::sqrt(total.count) : 0.0;
  est.min = total.min;
  est.max = total.max;
  est.generator_id = Philox4x32::kId;
  return est;
}

McComparison compare(const BigRational& exact, const McEstimate& estimate, double z_threshold) {
  McComparison out;
  out.exact = exact.to_double();
  out.abs_error = std::abs(estimate.mean - out.exact);
  out.threshold = z_threshold;
  if (estimate.standard_error > 0.0) {
    out.z = out.abs_error / estimate.standard_error;
  } else {
    out.z = out.abs_error == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  out.pass = out.z < z_threshold;
  return out;
}

}  // namespace mstpoly
