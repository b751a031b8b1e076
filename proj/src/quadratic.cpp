#include "pnw/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace pnw {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  return s * s == n;
}

int sign_of_surd(const BigInt& x, const BigInt& y, const BigInt& d) {
  const int sx = x.sign();
  const int sy = y.sign();
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: compare magnitudes by squaring.
  BigInt lhs = x * x;
  BigInt rhs = y * y * d;
  int mag = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return sx > 0 ? mag : -mag;
}

QuadraticNumber::QuadraticNumber(const Rational& r) : a_(r.numerator()), c_(r.denominator()) {}

QuadraticNumber::QuadraticNumber(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::invalid_argument("quadratic number with zero denominator");
  if (d_ < 1) throw std::invalid_argument("radicand must be a positive integer");
  normalize(true);
}

QuadraticNumber QuadraticNumber::same_radicand(BigInt a, BigInt b, BigInt c, const BigInt& d) {
  if (c == 0) throw std::invalid_argument("quadratic number with zero denominator");
  QuadraticNumber r;
  r.a_ = std::move(a);
  r.b_ = std::move(b);
  r.c_ = std::move(c);
  r.d_ = d;
  r.normalize(false);
  return r;
}

void QuadraticNumber::normalize(bool reduce_radicand) {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ != 0 && reduce_radicand) {
    // Pull small square factors of d into b.
    for (BigInt p = 2; p * p <= d_ && p <= 1'000'000; ++p) {
      BigInt sq = p * p;
      while (d_ % sq == 0) {
        d_ /= sq;
        b_ *= p;
      }
    }
    BigInt s = isqrt(d_);
    if (s * s == d_) {
      a_ += b_ * s;
      b_ = 0;
    }
  }
  if (b_ == 0) d_ = 1;
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

std::optional<Rational> QuadraticNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return Rational(a_, c_);
}

int QuadraticNumber::sign() const { return sign_of_surd(a_, b_, d_); }

int QuadraticNumber::compare(const Rational& r) const {
  const BigInt& p = r.numerator();
  const BigInt& q = r.denominator();
  return sign_of_surd(a_ * q - p * c_, b_ * q, d_);
}

BigInt QuadraticNumber::floor() const {
  if (b_ == 0) return floor_div(a_, c_);
  // sqrt(b^2 d) is irrational, so S < sqrt(b^2 d) < S + 1 strictly.
  BigInt s = isqrt(b_ * b_ * d_);
  if (b_ > 0) return floor_div(a_ + s, c_);
  return floor_div(a_ - s - 1, c_);
}

BigInt QuadraticNumber::ceil() const { return -(-*this).floor(); }

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadraticNumber QuadraticNumber::reciprocal() const {
  if (sign() == 0) throw std::domain_error("reciprocal of zero");
  if (b_ == 0) return QuadraticNumber(c_, 0, a_, 1);
  return same_radicand(c_ * a_, -c_ * b_, a_ * a_ - b_ * b_ * d_, d_);
}

QuadraticNumber operator+(const QuadraticNumber& x, const Rational& r) {
  const BigInt& p = r.numerator();
  const BigInt& q = r.denominator();
  return QuadraticNumber::same_radicand(x.a_ * q + p * x.c_, x.b_ * q, x.c_ * q, x.d_);
}

QuadraticNumber operator*(const QuadraticNumber& x, const Rational& r) {
  const BigInt& p = r.numerator();
  const BigInt& q = r.denominator();
  return QuadraticNumber::same_radicand(x.a_ * p, x.b_ * p, x.c_ * q, x.d_);
}

double QuadraticNumber::approx() const {
  return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>())) /
         c_.convert_to<double>();
}

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return Rational(a_, c_).to_string();
  std::string s = "(" + a_.str();
  s += b_ > 0 ? "+" : "-";
  BigInt mag = b_ > 0 ? b_ : BigInt(-b_);
  s += mag.str() + "*sqrt(" + d_.str() + "))/" + c_.str();
  return s;
}

// ---------------------------------------------------------------------------

SlopeSpec SlopeSpec::rational(BigInt p, BigInt q) { return SlopeSpec(QuadraticNumber(Rational(p, q))); }

SlopeSpec SlopeSpec::rational(const Rational& r) { return SlopeSpec(QuadraticNumber(r)); }

SlopeSpec SlopeSpec::quadratic(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (b == 0) throw std::invalid_argument("quadratic slope needs a non-zero sqrt coefficient");
  QuadraticNumber v(std::move(a), std::move(b), std::move(c), std::move(d));
  if (v.is_rational()) throw std::invalid_argument("quadratic slope must be irrational (radicand is a square)");
  return SlopeSpec(std::move(v));
}

namespace {

class SurdParser {
 public:
  explicit SurdParser(std::string text) : text_(std::move(text)) {}

  QuadraticNumber parse() {
    QuadraticNumber value;
    if (peek() == '(') {
      ++pos_;
      value = sum();
      expect(')');
    } else {
      value = sum();
    }
    if (peek() == '/') {
      ++pos_;
      BigInt den = integer();
      if (den == 0) fail("zero denominator");
      value = value * Rational(BigInt(1), den);
    }
    if (pos_ != text_.size()) fail("unexpected trailing characters");
    return value;
  }

 private:
  QuadraticNumber sum() {
    BigInt a = 0, b = 0, d = 0;
    bool first = true;
    while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != '/') {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      BigInt coef = 1;
      bool has_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = integer();
        has_coef = true;
        if (peek() == '*') {
          ++pos_;
        } else {
          a += sgn * coef;
          continue;
        }
      }
      if (text_.compare(pos_, 5, "sqrt(") != 0) fail(has_coef ? "expected sqrt(...)" : "expected a term");
      pos_ += 5;
      BigInt rad = integer();
      expect(')');
      if (d != 0 && d != rad) fail("only one radicand is supported");
      d = rad;
      b += sgn * coef;
    }
    if (first) fail("empty expression");
    if (d == 0) d = 1;
    if (d < 1) fail("radicand must be positive");
    return QuadraticNumber(a, b, 1, d);
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed slope '" + text_ + "': " + why);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SlopeSpec SlopeSpec::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.find("sqrt") == std::string::npos) {
    if (compact.find('(') == std::string::npos) return rational(Rational::parse(compact));
  }
  return SlopeSpec(SurdParser(compact).parse());
}

}  // namespace pnw
