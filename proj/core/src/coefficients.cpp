#include "mstpoly/coefficients.hpp"

#include <sstream>

namespace mstpoly {

namespace {

// binom(a, b) with the counting convention that there are no ways to choose
// from a negative pool.
BigInt choose(long long a, long long b) { return a < 0 ? BigInt(0) : binomial(a, b); }

BigInt signed_term(int parity, BigInt value) { return parity % 2 == 0 ? value : BigInt(-value); }

void check_shapes(const Graph& g, const RankTable& table) {
  if (g.n() != table.n() || g.m() != table.m()) {
    throw std::invalid_argument("rank table does not belong to this graph");
  }
}

void check_index(const Graph& g, int i) {
  if (i < 0 || i > g.m()) {
    throw std::out_of_range("coefficient index " + std::to_string(i) + " outside 0.." + std::to_string(g.m()));
  }
}

// sum_{j=r_l}^{l} c_j binom(m-j, m-l)
BigInt cycle_extension_sum(const SubgraphCensus& census, int m, int edges) {
  BigInt sum = 0;
  for (int j = r_min(edges); j <= edges; ++j) {
    const std::uint64_t c = census.cycle(j);
    if (c != 0) sum += choose(m - j, m - edges) * c;
  }
  return sum;
}

std::string render(const CoefficientVector& v) {
  std::ostringstream out;
  out << route_name(v.route) << " = [";
  for (std::size_t i = 0; i < v.a.size(); ++i) {
    if (i != 0) out << ", ";
    if (v.a[i]) {
      out << *v.a[i];
    } else {
      out << "null";
    }
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string route_name(Route route) {
  switch (route) {
    case Route::kDirect: return "direct";
    case Route::kAlternating: return "eq2";
    case Route::kRank: return "rank";
    case Route::kReduced: return "reduced";
    case Route::kStructural: return "structural";
  }
  return "?";
}

Route parse_route(std::string_view name) {
  for (Route r : kAllRoutes) {
    if (route_name(r) == name) return r;
  }
  throw std::invalid_argument("unknown route \"" + std::string(name) + "\"");
}

const BigInt& DCorrections::at(int edges) const {
  if (edges < 3 || edges > 6) throw std::out_of_range("d_l is defined for l = 3..6");
  return d[static_cast<std::size_t>(edges - 3)];
}

BigInt coeff_alternating(const Graph& g, const RankTable& table, int i) {
  check_shapes(g, table);
  check_index(g, i);
  const int m = g.m();
  BigInt a = 0;
  for (int l = 0; l <= i; ++l) {
    a += signed_term(i - l, binomial(m - l, m - i) * table.component_sum(l));
  }
  return a;
}

BigInt coeff_rank(const Graph& g, const RankTable& table, int i) {
  check_shapes(g, table);
  check_index(g, i);
  const int n = g.n();
  const int m = g.m();
  BigInt a = 0;
  for (int l = 0; l <= i; ++l) {
    BigInt inner = 0;
    for (int r = r_min(l); r <= l; ++r) inner += BigInt(table.count(l, r)) * (n - r);
    a += signed_term(i - l, binomial(m - l, m - i) * inner);
  }
  return a;
}

BigInt coeff_reduced(const Graph& g, const RankTable& table, int i) {
  check_shapes(g, table);
  if (i < 3) throw std::invalid_argument("the reduced rank formula applies only to i >= 3");
  check_index(g, i);
  const int m = g.m();
  BigInt a = 0;
  for (int l = 3; l <= i; ++l) {
    BigInt inner = 0;
    for (int r = r_min(l); r <= l - 1; ++r) inner += BigInt(table.count(l, r)) * (l - r);
    a += signed_term(i - l, binomial(m - l, m - i) * inner);
  }
  return a;
}

DCorrections d_corrections(const SubgraphCensus& census) {
  DCorrections out;
  out.d[0] = 0;
  out.d[1] = 0;
  out.d[2] = census.chorded4;
  out.d[3] = BigInt(census.cbar41) + census.chorded5 + census.k32 + BigInt(census.k4) * 4;
  return out;
}

BigInt coeff_structural(const Graph& g, const SubgraphCensus& census, int i) {
  switch (i) {
    case 0: return g.n();
    case 1: return -g.m();
    case 2: return 0;
    case 3: return census.cycle(3);
    case 4: return census.cycle(4);
    case 5: return BigInt(census.cycle(5)) - census.chorded4;
    case 6: return BigInt(census.cycle(6)) + BigInt(census.k4) * 2 - census.chorded5 - census.k32;
    default: break;
  }
  throw std::invalid_argument("no structural formula for a_" + std::to_string(i) + " (only i <= 6)");
}

CycleIdentityReport cycle_identity(const Graph& g, const SubgraphCensus& census, int i) {
  if (i < 3) throw std::invalid_argument("cycle identity needs i >= 3");
  const int m = g.m();
  CycleIdentityReport report;
  report.i = i;
  for (int l = 3; l <= i; ++l) {
    report.lhs += signed_term(i - l, choose(m - l, m - i) * cycle_extension_sum(census, m, l));
  }
  report.c_i = census.cycle(i);
  report.holds = report.lhs == report.c_i;
  return report;
}

bool check_cycle_correction(const Graph& g, const RankTable& table, const SubgraphCensus& census, int i) {
  if (i < 3 || i > 6) throw std::invalid_argument("check_cycle_correction covers i = 3..6");
  const int m = g.m();
  const DCorrections d = d_corrections(census);
  BigInt correction = 0;
  for (int l = 3; l <= i; ++l) correction += signed_term(i - l, choose(m - l, m - i) * d.at(l));
  const BigInt via_corrections = BigInt(census.cycle(i)) - correction;
  return cycle_identity(g, census, i).holds && via_corrections == coeff_reduced(g, table, i);
}

CorrectionIdentityReport check_correction_identity(const Graph& g, const RankTable& table,
                                                   const SubgraphCensus& census, int edges) {
  check_shapes(g, table);
  if (edges < 3 || edges > 6) throw std::invalid_argument("correction identity covers l = 3..6");
  CorrectionIdentityReport report;
  report.edges = edges;
  for (int r = r_min(edges); r <= edges - 1; ++r) report.lhs += BigInt(table.count(edges, r)) * (edges - r);
  report.rhs = cycle_extension_sum(census, g.m(), edges) - d_corrections(census).at(edges);
  report.holds = report.lhs == report.rhs;
  return report;
}

CoefficientVector direct_coefficients(const IntPolynomial& integrand, int m) {
  CoefficientVector v{Route::kDirect, {}};
  v.a.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) v.a.emplace_back(integrand.coefficient(i) + (i == 0 ? 1 : 0));
  return v;
}

CoefficientVector route_coefficients(Route route, const Graph& g, const RankTable& table,
                                     const SubgraphCensus& census) {
  check_shapes(g, table);
  const int m = g.m();
  if (route == Route::kDirect) return direct_coefficients(direct_integrand(table), m);

  CoefficientVector v{route, std::vector<std::optional<BigInt>>(static_cast<std::size_t>(m) + 1)};
  for (int i = 0; i <= m; ++i) {
    auto& slot = v.a[static_cast<std::size_t>(i)];
    switch (route) {
      case Route::kAlternating: slot = coeff_alternating(g, table, i); break;
      case Route::kRank: slot = coeff_rank(g, table, i); break;
      case Route::kReduced:
        if (i >= 3) slot = coeff_reduced(g, table, i);
        break;
      case Route::kStructural:
        if (i <= 6) slot = coeff_structural(g, census, i);
        break;
      case Route::kDirect: break;
    }
  }
  return v;
}

const CoefficientVector& RouteCoefficients::get(Route route) const {
  switch (route) {
    case Route::kDirect: return direct;
    case Route::kAlternating: return alternating;
    case Route::kRank: return rank;
    case Route::kReduced: return reduced;
    case Route::kStructural: return structural;
  }
  return direct;
}

RouteCoefficients all_routes(const Graph& g, const RankTable& table, const SubgraphCensus& census) {
  return RouteCoefficients{
      route_coefficients(Route::kDirect, g, table, census),
      route_coefficients(Route::kAlternating, g, table, census),
      route_coefficients(Route::kRank, g, table, census),
      route_coefficients(Route::kReduced, g, table, census),
      route_coefficients(Route::kStructural, g, table, census),
  };
}

std::vector<std::string> route_disagreements(const RouteCoefficients& routes) {
  std::vector<std::string> out;
  const auto& ref = routes.direct.a;
  for (Route r : kAllRoutes) {
    if (r == Route::kDirect) continue;
    const auto& v = routes.get(r).a;
    if (v.size() != ref.size()) {
      out.push_back(route_name(r) + ": length " + std::to_string(v.size()) + " vs " + std::to_string(ref.size()));
      continue;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] && ref[i] && *v[i] != *ref[i]) {
        std::ostringstream msg;
        msg << route_name(r) << ": a_" << i << " = " << *v[i] << " but direct gives " << *ref[i];
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

RouteDisagreement::RouteDisagreement(RouteCoefficients routes, const std::vector<std::string>& mismatches)
    : std::logic_error([&] {
        std::ostringstream msg;
        msg << "coefficient routes disagree:";
        for (const auto& s : mismatches) msg << "\n  " << s;
        for (Route r : kAllRoutes) msg << "\n  " << render(routes.get(r));
        return msg.str();
      }()),
      routes_(std::move(routes)) {}

}  // namespace mstpoly
