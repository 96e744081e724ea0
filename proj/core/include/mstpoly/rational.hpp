#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mstpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if den == 0.
  BigRational(BigInt num, BigInt den);

  /// Parses "p", "-p" or "p/q".
  static BigRational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  /// Integer power; negative exponents invert. 0^negative throws std::domain_error.
  BigRational pow(int exponent) const;

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  /// Fixed-point rendering rounded half away from zero to `digits` places.
  std::string decimal(int digits = 10) const;
  double to_double() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

}  // namespace mstpoly
