#include "cli/report.hpp"

#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

namespace mstpoly::cli {

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << std::fixed << v;
  return out.str();
}

std::string optional_rational(const std::optional<BigRational>& v, int digits) {
  return v ? v->decimal(digits) : std::string("-");
}

}  // namespace

json integer_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return json(value.convert_to<std::int64_t>());
  }
  return json(value.str());
}

json rational_json(const BigRational& value, int digits) {
  return json{{"value", value.str()},
              {"num", value.num().str()},
              {"den", value.den().str()},
              {"decimal", value.decimal(digits)}};
}

json polynomial_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(integer_json(c));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

json coefficient_vector_json(const CoefficientVector& v) {
  json arr = json::array();
  for (const auto& a : v.a) arr.push_back(a ? integer_json(*a) : json(nullptr));
  return arr;
}

json routes_json(const RouteCoefficients& routes, const std::vector<Route>& which) {
  json out = json::object();
  for (Route r : which) out[route_name(r)] = coefficient_vector_json(routes.get(r));
  return out;
}

json expectation_json(const MstExpectation& e, int digits) {
  return json{
      {"n", e.n},
      {"m", e.m},
      {"p", polynomial_json(e.polynomial)},
      {"a", routes_json(e.coefficients, {Route::kDirect, Route::kAlternating, Route::kRank, Route::kStructural})},
      {"expectation", rational_json(e.expectation, digits)},
  };
}

json census_json(const SubgraphCensus& census) {
  json out = json::object();
  for (const auto& [len, count] : census.cycles) out["c" + std::to_string(len)] = count;
  out["c41"] = census.chorded4;
  out["c51"] = census.chorded5;
  out["cbar41"] = census.cbar41;
  out["k4"] = census.k4;
  out["k32"] = census.k32;
  out["diamond"] = census.chorded4;
  out["max_len"] = census.max_len;
  return out;
}

json simulation_json(const McEstimate& est, const std::optional<McComparison>& cmp) {
  json out{
      {"trials", est.trials},   {"seed", est.seed}, {"mean", est.mean},
      {"stderr", est.standard_error}, {"min", est.min},   {"max", est.max},
      {"generator_id", est.generator_id},
  };
  // Comparison keys are always present; null when the graph is beyond the cap.
  out["exact"] = cmp ? json(cmp->exact) : json(nullptr);
  out["z_vs_exact"] = cmp ? json(cmp->z) : json(nullptr);
  out["z_threshold"] = cmp ? json(cmp->threshold) : json(nullptr);
  out["pass"] = cmp ? json(cmp->pass) : json(nullptr);
  return out;
}

json kn_table_json(const std::vector<KnRow>& rows, int digits) {
  json arr = json::array();
  bool increasing = true;
  bool concave = true;
  for (const auto& row : rows) {
    json r{{"n", row.n}, {"expectation", rational_json(row.expectation, digits)}, {"below_zeta3", row.below_zeta3}};
    r["delta"] = row.delta ? rational_json(*row.delta, digits) : json(nullptr);
    r["second_difference"] = row.second_difference ? rational_json(*row.second_difference, digits) : json(nullptr);
    r["increasing"] = row.increasing ? json(*row.increasing) : json(nullptr);
    r["concave"] = row.concave ? json(*row.concave) : json(nullptr);
    if (row.increasing && !*row.increasing) increasing = false;
    if (row.concave && !*row.concave) concave = false;
    arr.push_back(std::move(r));
  }
  return json{
      {"rows", arr},
      {"zeta3", fixed(kZeta3, 10)},
      {"observed", {{"increasing", increasing}, {"concave", concave}}},
  };
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

std::string expectation_plain(const MstExpectation& e, int digits) {
  std::ostringstream out;
  out << "n = " << e.n << ", m = " << e.m << "\n";
  out << "p(t) = " << e.polynomial.str() << "\n";
  out << "E[L] = " << e.expectation.str() << " ~ " << e.expectation.decimal(digits) << "\n";
  return out.str();
}

std::string census_plain(const SubgraphCensus& census) {
  std::ostringstream out;
  for (const auto& [len, count] : census.cycles) out << "c" << len << " = " << count << "\n";
  out << "c41 = " << census.chorded4 << "\n"
      << "c51 = " << census.chorded5 << "\n"
      << "cbar41 = " << census.cbar41 << "\n"
      << "k4 = " << census.k4 << "\n"
      << "k32 = " << census.k32 << "\n"
      << "diamond = " << census.chorded4 << "\n";
  return out.str();
}

std::string simulation_plain(const McEstimate& est, const std::optional<McComparison>& cmp) {
  std::ostringstream out;
  out << "trials = " << est.trials << ", seed = " << est.seed << " (" << est.generator_id << ")\n";
  out << "mean = " << fixed(est.mean, 8) << " +/- " << fixed(est.standard_error, 8) << "\n";
  out << "range = [" << fixed(est.min, 6) << ", " << fixed(est.max, 6) << "]\n";
  if (cmp) {
    out << "exact = " << fixed(cmp->exact, 8) << ", z = " << fixed(cmp->z, 3) << " -> "
        << (cmp->pass ? "PASS" : "FAIL") << " (threshold " << cmp->threshold << ")\n";
  }
  return out.str();
}

std::string kn_table_plain(const std::vector<KnRow>& rows, int digits) {
  std::ostringstream out;
  out << "n  E[L(K_n)]                       decimal        delta          second_diff    inc  concave\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(3) << row.n << std::setw(32) << row.expectation.str() << std::setw(15)
        << row.expectation.decimal(digits) << std::setw(15) << optional_rational(row.delta, digits) << std::setw(15)
        << optional_rational(row.second_difference, digits) << std::setw(5)
        << (row.increasing ? (*row.increasing ? "yes" : "NO") : "-")
        << (row.concave ? (*row.concave ? "yes" : "NO") : "-") << "\n";
  }
  out << "zeta(3) = " << fixed(kZeta3, 10) << "... (limit as n -> infinity)\n";
  return out.str();
}

}  // namespace mstpoly::cli
