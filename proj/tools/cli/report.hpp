#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstpoly/census.hpp"
#include "mstpoly/coefficients.hpp"
#include "mstpoly/expectation.hpp"
#include "mstpoly/graph.hpp"
#include "mstpoly/monte_carlo.hpp"

namespace mstpoly::cli {

using nlohmann::json;

/// Integers are JSON numbers while they fit in 64 bits, decimal strings beyond.
json integer_json(const BigInt& value);
/// {"value": "51/35", "num": "51", "den": "35", "decimal": "1.4571428571"}
json rational_json(const BigRational& value, int digits);
json polynomial_json(const IntPolynomial& p);
/// Array with null where the route defines no coefficient.
json coefficient_vector_json(const CoefficientVector& v);
json routes_json(const RouteCoefficients& routes, const std::vector<Route>& which);

/// {"n", "m", "p", "a": {"direct", "eq2", "rank", "structural"}, "expectation"}
json expectation_json(const MstExpectation& e, int digits);
/// {"c3".., "c41", "c51", "cbar41", "k4", "k32", "diamond", "max_len"}
json census_json(const SubgraphCensus& census);
/// {trials, seed, mean, stderr, min, max, generator_id[, exact, z_vs_exact, pass]}
json simulation_json(const McEstimate& est, const std::optional<McComparison>& cmp);
json kn_table_json(const std::vector<KnRow>& rows, int digits);
json graph_json(const Graph& g);

std::string expectation_plain(const MstExpectation& e, int digits);
std::string census_plain(const SubgraphCensus& census);
std::string simulation_plain(const McEstimate& est, const std::optional<McComparison>& cmp);
std::string kn_table_plain(const std::vector<KnRow>& rows, int digits);

}  // namespace mstpoly::cli
