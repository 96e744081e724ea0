#include "mstpoly/expectation.hpp"

#include <string>

namespace mstpoly {

MstExpectation expected_mst_length(const Graph& g, const EnumerationOptions& options) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const RankTable table = build_rank_table(g, options);
  const SubgraphCensus census = take_census(g);

  MstExpectation out;
  out.n = g.n();
  out.m = g.m();
  out.polynomial = direct_integrand(table);
  out.coefficients = all_routes(g, table, census);

  const auto mismatches = route_disagreements(out.coefficients);
  if (!mismatches.empty()) throw RouteDisagreement(out.coefficients, mismatches);

  out.expectation = poly_integrate_unit(out.polynomial);
  return out;
}

BigInt kn_coefficients(int n, int i) {
  if (n < 2) throw std::invalid_argument("kn_coefficients needs n >= 2");
  switch (i) {
    case 0: return n;
    case 1: return -binomial(n, 2);
    case 2: return 0;
    case 3: return binomial(n, 3);
    case 4: return 3 * binomial(n, 4);
    case 5: return 12 * binomial(n, 5) - 6 * binomial(n, 4);
    case 6: return 60 * binomial(n, 6) - 60 * binomial(n, 5) - 2 * BigInt(n - 5) * binomial(n, 4);
    default: break;
  }
  throw std::invalid_argument("no closed form for a_" + std::to_string(i) + " of K_n (only i <= 6)");
}

IntPolynomial factor_out_unity_root(const IntPolynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("factor_out_unity_root needs n >= 1");
  IntPolynomial q = poly_divide_exact(p, IntPolynomial::one_minus_t_power(n - 1));
  const BigInt bound = binomial(n - 1, 2);
  if (BigInt(q.degree()) > bound) {
    throw std::logic_error("quotient degree " + std::to_string(q.degree()) + " exceeds binom(n-1, 2) = " +
                           bound.str());
  }
  return q;
}

std::vector<KnRow> kn_table(int max_n, const EnumerationOptions& options) {
  if (max_n < 2) throw std::invalid_argument("kn_table needs max_n >= 2");
  const long long edges = static_cast<long long>(max_n) * (max_n - 1) / 2;
  if (edges > options.cap) throw CapExceeded(static_cast<int>(edges), options.cap);

  const BigRational zeta3_bound = BigRational::parse("12020569031595942/10000000000000000");
  std::vector<KnRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    KnRow row;
    row.n = n;
    row.expectation = expected_mst_length(complete_graph(n), options).expectation;
    row.below_zeta3 = row.expectation < zeta3_bound;
    if (!rows.empty()) {
      const KnRow& prev = rows.back();
      row.delta = row.expectation - prev.expectation;
      row.increasing = row.delta->sign() > 0;
      if (prev.delta) {
        row.second_difference = *row.delta - *prev.delta;
        row.concave = row.second_difference->sign() < 0;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mstpoly
