#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mstpoly/census.hpp"
#include "mstpoly/enumeration.hpp"
#include "mstpoly/graph.hpp"
#include "mstpoly/polynomial.hpp"

namespace mstpoly {

/// Independent derivations of a_i in p(t) = -1 + sum_i a_i t^i.
enum class Route {
  kDirect,       ///< expansion of sum_A k(A) t^|A| (1-t)^(m-|A|)
  kAlternating,  ///< alternating binomial sum over sum_{A in S_l} k(A); named "eq2"
  kRank,         ///< same sum regrouped by rank, r from r_min(l) to l
  kReduced,      ///< reduced sum with weights (l - r), i >= 3 only
  kStructural,   ///< closed forms in cycle/clique counts, i <= 6 only
};

std::string route_name(Route route);
/// Throws std::invalid_argument for an unknown name.
Route parse_route(std::string_view name);
inline constexpr std::array<Route, 5> kAllRoutes = {Route::kDirect, Route::kAlternating, Route::kRank, Route::kReduced,
                                                     Route::kStructural};

/// a_0..a_m from one route; entries the route does not define are empty.
struct CoefficientVector {
  Route route = Route::kDirect;
  std::vector<std::optional<BigInt>> a;
  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// d_l for l = 3..6.
struct DCorrections {
  std::array<BigInt, 4> d;  // d[l - 3]
  const BigInt& at(int edges) const;
  friend bool operator==(const DCorrections&, const DCorrections&) = default;
};

/// Throws std::out_of_range unless 0 <= i <= m.
BigInt coeff_alternating(const Graph& g, const RankTable& table, int i);
BigInt coeff_rank(const Graph& g, const RankTable& table, int i);
/// Throws std::invalid_argument for i < 3.
BigInt coeff_reduced(const Graph& g, const RankTable& table, int i);

DCorrections d_corrections(const SubgraphCensus& census);
/// Throws std::invalid_argument for i > 6.
BigInt coeff_structural(const Graph& g, const SubgraphCensus& census, int i);

/// sum_{l=3}^{i} (-1)^(i-l) binom(m-l, m-i) sum_{j=r_l}^{l} c_j binom(m-j, m-l),
/// compared with c_i. Proven for i <= 6; for larger i this is only evidence.
struct CycleIdentityReport {
  int i = 0;
  BigInt lhs;
  BigInt c_i;
  bool holds = false;
};
CycleIdentityReport cycle_identity(const Graph& g, const SubgraphCensus& census, int i);

/// The cycle identity together with a_i = c_i - sum (-1)^(i-l) binom(m-l, m-i) d_l
/// against coeff_reduced. Throws std::invalid_argument unless 3 <= i <= 6.
bool check_cycle_correction(const Graph& g, const RankTable& table, const SubgraphCensus& census, int i);

/// sum_{r=r_l}^{l-1} k_r^l (l-r) = sum_{j=r_l}^{l} c_j binom(m-j, m-l) - d_l.
struct CorrectionIdentityReport {
  int edges = 0;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};
/// Throws std::invalid_argument unless 3 <= edges <= 6.
CorrectionIdentityReport check_correction_identity(const Graph& g, const RankTable& table,
                                                   const SubgraphCensus& census, int edges);

/// p with the -1 folded back in: a_0 = p_0 + 1.
CoefficientVector direct_coefficients(const IntPolynomial& integrand, int m);
CoefficientVector route_coefficients(Route route, const Graph& g, const RankTable& table,
                                     const SubgraphCensus& census);

struct RouteCoefficients {
  CoefficientVector direct;
  CoefficientVector alternating;
  CoefficientVector rank;
  CoefficientVector reduced;
  CoefficientVector structural;

  const CoefficientVector& get(Route route) const;
};

RouteCoefficients all_routes(const Graph& g, const RankTable& table, const SubgraphCensus& census);

/// Human-readable description of each (route, index) where a defined entry
/// differs from the direct route. Empty means full agreement.
std::vector<std::string> route_disagreements(const RouteCoefficients& routes);

/// Two routes produced different coefficients: an implementation bug.
class RouteDisagreement : public std::logic_error {
 public:
  RouteDisagreement(RouteCoefficients routes, const std::vector<std::string>& mismatches);
  const RouteCoefficients& routes() const noexcept { return routes_; }

 private:
  RouteCoefficients routes_;
};

}  // namespace mstpoly
