#include "cli/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mstpoly/census.hpp"
#include "mstpoly/expectation.hpp"

namespace mstpoly::cli {

namespace {

// Experimental cycle-identity reports go no further than this length.
constexpr int kExperimentalMaxLength = 10;

template <typename T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerifyReport::route_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.route_check && !c.pass; });
}

VerifyReport run_verification(const Graph& g, const EnumerationOptions& options, bool experimental) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const int n = g.n();
  const int m = g.m();
  const RankTable table = build_rank_table(g, options);
  const int census_len = experimental ? std::clamp(std::min(n, m), 6, kExperimentalMaxLength) : 6;
  const SubgraphCensus census = take_census(g, census_len);

  VerifyReport report;
  report.n = n;
  report.m = m;
  auto add = [&](std::string name, bool pass, std::string detail = {}, bool route = false) {
    report.checks.push_back({std::move(name), pass, std::move(detail), route});
  };

  {
    bool ok = true;
    std::string detail;
    for (int l = 0; l <= m && ok; ++l) {
      if (table.row_total(l) != binomial(m, l)) {
        ok = false;
        detail = "row l=" + std::to_string(l) + " sums to " + table.row_total(l).str();
      }
    }
    add("rank-table-row-sums", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int l = 0; l <= m; ++l) {
      for (int r = 0; r < n; ++r) {
        if (table.count(l, r) != 0 && (r < r_min(l) || r > l)) {
          ok = false;
          detail = "k_" + std::to_string(r) + "^" + std::to_string(l) + " = " + std::to_string(table.count(l, r));
        }
      }
    }
    add("rank-table-support", ok, detail);
  }
  {
    bool ok = table.count(m, n - 1) == 1 && table.row_total(m) == 1;
    add("full-edge-set-connected", ok);
  }

  const RouteCoefficients routes = all_routes(g, table, census);
  {
    const auto mismatches = route_disagreements(routes);
    std::string detail;
    for (const auto& s : mismatches) detail += (detail.empty() ? "" : "; ") + s;
    add("route-equivalence", mismatches.empty(), detail, true);
  }
  const auto& a = routes.direct.a;
  {
    bool ok = *a[0] == n;
    if (m >= 1) ok = ok && *a[1] == -m;
    if (m >= 2) ok = ok && a[2]->is_zero();
    add("low-coefficients", ok, "a0=" + str(*a[0]) + (m >= 1 ? " a1=" + str(*a[1]) : "") +
                                    (m >= 2 ? " a2=" + str(*a[2]) : ""));
  }

  const IntPolynomial p = direct_integrand(table);
  add("integrand-at-0", poly_eval(p, 0) == BigRational(n - 1), poly_eval(p, 0).str());
  add("integrand-at-1", poly_eval(p, 1).is_zero(), poly_eval(p, 1).str());
  add("integrand-degree", p.degree() <= m, std::to_string(p.degree()));
  {
    bool ok = true;
    for (int j = 1; j <= 9; ++j) ok = ok && poly_eval(p, BigRational(j, 10)).sign() >= 0;
    add("integrand-nonnegative", ok);
  }
  {
    BigInt sum = 0;
    for (const auto& c : a) sum += *c;
    add("coefficient-sum", sum == 1, sum.str());
  }

  for (const char* text : {"1/3", "1/2", "2/5"}) {
    const BigRational t = BigRational::parse(text);
    const HyperbolaVerdict v = check_tutte_hyperbola(table, t);
    add(std::string("tutte-hyperbola t=") + text, v.value_identity);
    add(std::string("tutte-partial-hyperbola t=") + text, v.partial_identity);
    add(std::string("integrand-tutte-ratio t=") + text, check_integrand_ratio(table, t));
  }

  for (int l = 3; l <= std::min(6, m); ++l) {
    const auto r = check_correction_identity(g, table, census, l);
    add("correction-identity l=" + std::to_string(l), r.holds, r.lhs.str() + " vs " + r.rhs.str());
  }
  for (int i = 3; i <= std::min(6, m); ++i) {
    add("cycle-correction i=" + std::to_string(i), check_cycle_correction(g, table, census, i));
  }
  {
    const auto d = diamond_count(g);
    add("diamond-consistency", d == table.count(5, 3),
        std::to_string(d) + " vs " + std::to_string(table.count(5, 3)));
  }
  {
    const BigRational e = poly_integrate_unit(p);
    const bool ok = m == 0 ? e.is_zero() : (e.sign() > 0 && e < BigRational(n - 1));
    add("expectation-bounds", ok, e.str());
  }

  if (experimental) {
    for (int i = 7; i <= std::min({census.max_len, n, m}); ++i) report.experimental.push_back(cycle_identity(g, census, i));
  }
  return report;
}

}  // namespace mstpoly::cli
