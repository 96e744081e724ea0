#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mstpoly/rational.hpp"

namespace mstpoly {

/// binom(a, b) for a >= 0; zero when b < 0 or b > a.
BigInt binomial(long long a, long long b);

/// Raised when a polynomial division leaves a nonzero remainder or needs
/// non-integer quotient coefficients.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// Never stores a trailing zero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(BigInt coefficient, int degree);
  /// (1 - t)^k, expanded.
  static IntPolynomial one_minus_t_power(int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of t^i; zero beyond the degree.
  BigInt coefficient(int i) const;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  BigRational eval(const BigRational& t) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string str(char var = 't') const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Exact Horner evaluation.
BigRational poly_eval(const IntPolynomial& p, const BigRational& t);
/// Integral of p over [0, 1].
BigRational poly_integrate_unit(const IntPolynomial& p);
/// Returns q with p = d * q. Throws InexactDivision when no integer q exists
/// and std::invalid_argument when d is zero.
IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& d);

/// Sparse polynomial in x and y with integer coefficients. Zero coefficients
/// are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x-degree, y-degree)

  BivariatePolynomial() = default;

  void add_term(int x_degree, int y_degree, const BigInt& coefficient);
  BigInt coefficient(int x_degree, int y_degree) const;
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigRational eval(const BigRational& x, const BigRational& y) const;
  BivariatePolynomial partial_x() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Highest x-degree first, e.g. "x^2 + x + y".
  std::string str() const;

 private:
  std::map<Exponents, BigInt> terms_;
};

BigRational bivar_eval(const BivariatePolynomial& p, const BigRational& x, const BigRational& y);
BivariatePolynomial bivar_partial_x(const BivariatePolynomial& p);

}  // namespace mstpoly
