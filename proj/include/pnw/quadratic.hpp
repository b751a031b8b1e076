#pragma once

// Exact arithmetic in Q(sqrt d). Slopes of mechanical words are either
// rational or quadratic irrationals; both are represented as
// (a + b*sqrt(d)) / c and every comparison or floor is decided with integers.

#include <optional>
#include <string>
#include <string_view>

#include "pnw/rational.hpp"

namespace pnw {

/// isqrt(n) = floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  /// (a + b*sqrt(d)) / c with c != 0 and d >= 1. Square factors of d are
  /// pulled into b; a perfect-square d collapses to a rational value.
  QuadraticNumber(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  std::optional<Rational> as_rational() const;

  int sign() const;
  /// Three-way comparison against a rational: -1, 0 or 1.
  int compare(const Rational& r) const;
  BigInt floor() const;
  BigInt ceil() const;

  QuadraticNumber operator-() const;
  QuadraticNumber reciprocal() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const Rational& r);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const Rational& r);

  double approx() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

 private:
  // Arithmetic results keep an already reduced radicand.
  static QuadraticNumber same_radicand(BigInt a, BigInt b, BigInt c, const BigInt& d);
  void normalize(bool reduce_radicand);

  BigInt a_{0};
  BigInt b_{0};
  BigInt c_{1};
  BigInt d_{1};
};

/// Sign of x + y*sqrt(d) for d >= 1 not a perfect square (or y == 0).
int sign_of_surd(const BigInt& x, const BigInt& y, const BigInt& d);

/// Slope of a mechanical word: either p/q or (a + b*sqrt(d))/c with b != 0
/// and d not a perfect square.
class SlopeSpec {
 public:
  static SlopeSpec rational(BigInt p, BigInt q);
  static SlopeSpec rational(const Rational& r);
  static SlopeSpec quadratic(BigInt a, BigInt b, BigInt c, BigInt d);

  /// "p/q", "p", "(a+b*sqrt(d))/c", "(a-sqrt(d))/c", "a+b*sqrt(d)".
  /// Throws std::invalid_argument on malformed text.
  static SlopeSpec parse(std::string_view text);

  bool is_rational() const { return value_.is_rational(); }
  std::optional<Rational> as_rational() const { return value_.as_rational(); }
  const QuadraticNumber& value() const { return value_; }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const SlopeSpec&, const SlopeSpec&) = default;

 private:
  explicit SlopeSpec(QuadraticNumber v) : value_(std::move(v)) {}
  QuadraticNumber value_;
};

}  // namespace pnw
