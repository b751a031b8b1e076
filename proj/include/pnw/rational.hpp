#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pnw {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division for arbitrary-precision integers; `den` must be non-zero.
BigInt floor_div(const BigInt& num, const BigInt& den);
/// Ceiling division for arbitrary-precision integers; `den` must be non-zero.
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt numerator, BigInt denominator);
  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  /// Parses "p/q" or "p" with decimal integers; throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }
  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == 1; }

  /// Always "p/q", including integers ("1/1").
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pnw
