#include "mstpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mstpoly {

BigInt binomial(long long a, long long b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (long long k = 1; k <= b; ++k) {
    out *= a - b + k;
    out /= k;
  }
  return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_minus_t_power(int k) {
  if (k < 0) throw std::invalid_argument("one_minus_t_power: negative exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
  c[0] = 1;
  // Multiply by (1 - t) k times, in place from the top down.
  for (int step = 1; step <= k; ++step) {
    for (int j = step; j >= 1; --j) c[j] -= c[j - 1];
  }
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRational IntPolynomial::eval(const BigRational& t) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += BigRational(*it);
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

BigRational poly_eval(const IntPolynomial& p, const BigRational& t) { return p.eval(t); }

BigRational poly_integrate_unit(const IntPolynomial& p) {
  BigRational acc;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) acc += BigRational(c[i], BigInt(i + 1));
  }
  return acc;
}

IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("poly_divide_exact: zero divisor");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw InexactDivision("poly_divide_exact: nonzero remainder");

  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  auto dc = d.coefficients();
  const int dd = d.degree();
  const BigInt& lead = dc.back();
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - dd) + 1);

  for (int k = p.degree() - dd; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + dd)];
    if (top.is_zero()) continue;
    if (top % lead != 0) throw InexactDivision("poly_divide_exact: non-integer quotient coefficient");
    BigInt f = top / lead;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * dc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(f);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw InexactDivision("poly_divide_exact: nonzero remainder");
  }
  return IntPolynomial(std::move(q));
}

void BivariatePolynomial::add_term(int x_degree, int y_degree, const BigInt& coefficient) {
  if (x_degree < 0 || y_degree < 0) throw std::invalid_argument("bivariate term with negative degree");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({x_degree, y_degree}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BigInt BivariatePolynomial::coefficient(int x_degree, int y_degree) const {
  auto it = terms_.find({x_degree, y_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigRational BivariatePolynomial::eval(const BigRational& x, const BigRational& y) const {
  BigRational acc;
  std::vector<BigRational> xp{BigRational(1)};
  std::vector<BigRational> yp{BigRational(1)};
  for (const auto& [exp, c] : terms_) {
    while (static_cast<int>(xp.size()) <= exp.first) xp.push_back(xp.back() * x);
    while (static_cast<int>(yp.size()) <= exp.second) yp.push_back(yp.back() * y);
    acc += BigRational(c) * xp[static_cast<std::size_t>(exp.first)] * yp[static_cast<std::size_t>(exp.second)];
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::partial_x() const {
  BivariatePolynomial out;
  for (const auto& [exp, c] : terms_) {
    if (exp.first == 0) continue;
    out.add_term(exp.first - 1, exp.second, c * exp.first);
  }
  return out;
}

std::string BivariatePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, c] = *it;
    BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = exp.first == 0 && exp.second == 0;
    if (constant || mag != 1) out << mag;
    if (exp.first > 0) out << 'x' << (exp.first > 1 ? "^" + std::to_string(exp.first) : "");
    if (exp.second > 0) out << 'y' << (exp.second > 1 ? "^" + std::to_string(exp.second) : "");
  }
  return out.str();
}

BigRational bivar_eval(const BivariatePolynomial& p, const BigRational& x, const BigRational& y) {
  return p.eval(x, y);
}

BivariatePolynomial bivar_partial_x(const BivariatePolynomial& p) { return p.partial_x(); }

}  // namespace mstpoly
