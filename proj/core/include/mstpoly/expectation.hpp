#pragma once

#include <optional>
#include <vector>

#include "mstpoly/census.hpp"
#include "mstpoly/coefficients.hpp"
#include "mstpoly/enumeration.hpp"
#include "mstpoly/graph.hpp"
#include "mstpoly/polynomial.hpp"
#include "mstpoly/rational.hpp"

namespace mstpoly {

/// Apery's constant, the n -> infinity limit of E[L(K_n)].
inline constexpr double kZeta3 = 1.2020569031595942;

/// Exact expected MST length under i.i.d. uniform [0,1] edge weights.
struct MstExpectation {
  int n = 0;
  int m = 0;
  IntPolynomial polynomial;  ///< full integrand, constant term n - 1
  RouteCoefficients coefficients;
  BigRational expectation;

  std::string decimal(int digits = 10) const { return expectation.decimal(digits); }
};

/// Enumerates once, derives the coefficients along every route, insists they
/// agree, and integrates. Throws DisconnectedGraph, CapExceeded, or
/// RouteDisagreement.
MstExpectation expected_mst_length(const Graph& g, const EnumerationOptions& options = {});

/// Closed forms for a_i of K_n, i <= 6. Throws std::invalid_argument for
/// i > 6 or n < 2.
BigInt kn_coefficients(int n, int i);

/// q with p = (1-t)^(n-1) q. Throws InexactDivision when the division is not
/// exact, and std::logic_error when deg q exceeds binom(n-1, 2).
IntPolynomial factor_out_unity_root(const IntPolynomial& p, int n);

struct KnRow {
  int n = 0;
  BigRational expectation;
  std::optional<BigRational> delta;              ///< E(K_n) - E(K_{n-1})
  std::optional<BigRational> second_difference;  ///< delta(n) - delta(n-1)
  std::optional<bool> increasing;                ///< delta > 0
  std::optional<bool> concave;                   ///< second difference < 0
  bool below_zeta3 = false;
};

/// E[L(K_n)] for n = 2..max_n. The monotone/concave behaviour is recorded
/// per row, never enforced. Throws CapExceeded when binom(max_n, 2) > cap.
std::vector<KnRow> kn_table(int max_n, const EnumerationOptions& options = {});

}  // namespace mstpoly
