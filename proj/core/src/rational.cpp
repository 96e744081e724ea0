#include "mstpoly/rational.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace mstpoly {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void BigRational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigRational BigRational::parse(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational: " + std::string(text));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: " + std::string(text));
    }
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(to_int(text));
  return BigRational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

BigRational BigRational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    BigRational inv(den_, num_);
    return inv.pow(-exponent);
  }
  BigRational out;
  out.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(exponent));
  out.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(exponent));
  return out;
}

std::string BigRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string BigRational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt magnitude = boost::multiprecision::abs(num_) * scale;
  BigInt q = magnitude / den_;
  BigInt r = magnitude % den_;
  if (r * 2 >= den_) ++q;

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (num_.sign() < 0 && !q.is_zero()) body.insert(0, "-");
  return body;
}

double BigRational::to_double() const {
  return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace mstpoly
