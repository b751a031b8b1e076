#include "pnw/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace pnw {

FiniteWord::FiniteWord(std::vector<Symbol> bits) : bits_(std::move(bits)) {
  for (Symbol b : bits_) {
    if (b > 1) throw std::invalid_argument("binary word symbols must be 0 or 1");
  }
}

FiniteWord FiniteWord::parse(std::string_view text) {
  std::vector<Symbol> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("binary word may only contain '0' and '1'");
    bits.push_back(static_cast<Symbol>(ch - '0'));
  }
  FiniteWord w;
  w.bits_ = std::move(bits);
  return w;
}

FiniteWord FiniteWord::repeat(Symbol bit, std::size_t count) {
  return FiniteWord(std::vector<Symbol>(count, bit));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  FiniteWord w;
  w.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

FiniteWord FiniteWord::factor(std::size_t start, std::size_t len) const {
  if (start > bits_.size() || len > bits_.size() - start)
    throw std::out_of_range("factor exceeds word bounds");
  FiniteWord w;
  auto first = bits_.begin() + static_cast<std::ptrdiff_t>(start);
  w.bits_.assign(first, first + static_cast<std::ptrdiff_t>(len));
  return w;
}

void FiniteWord::push_back(Symbol bit) {
  if (bit > 1) throw std::invalid_argument("binary word symbols must be 0 or 1");
  bits_.push_back(bit);
}

void FiniteWord::append(const FiniteWord& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void FiniteWord::append_run(Symbol bit, std::size_t count) {
  if (bit > 1) throw std::invalid_argument("binary word symbols must be 0 or 1");
  bits_.insert(bits_.end(), count, bit);
}

std::string FiniteWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::ostream& operator<<(std::ostream& os, const FiniteWord& w) { return os << w.to_string(); }

std::string ParikhVector::to_string() const {
  return "(" + std::to_string(zeros) + "," + std::to_string(ones) + ")";
}

PrefixProfile::PrefixProfile(std::vector<std::uint64_t> max_ones, std::vector<std::uint64_t> min_ones)
    : max_ones_(std::move(max_ones)), min_ones_(std::move(min_ones)) {
  if (max_ones_.size() != min_ones_.size())
    throw std::invalid_argument("profile arrays differ in length");
  std::uint64_t prev_max = 0, prev_min = 0;
  for (std::size_t i = 0; i < max_ones_.size(); ++i) {
    std::uint64_t hi = max_ones_[i], lo = min_ones_[i];
    if (hi < prev_max || hi - prev_max > 1 || lo < prev_min || lo - prev_min > 1)
      throw std::invalid_argument("profile arrays must be non-decreasing with steps in {0,1}");
    if (lo > hi || hi > i + 1) throw std::invalid_argument("profile requires min <= max <= length");
    prev_max = hi;
    prev_min = lo;
  }
}

std::uint64_t prefix_weight(const FiniteWord& w, std::size_t i) {
  if (i > w.size()) throw std::out_of_range("prefix length exceeds word length");
  auto bits = w.bits();
  return static_cast<std::uint64_t>(std::count(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(i), Symbol{1}));
}

Rational prefix_density(const FiniteWord& w, std::size_t i) {
  if (i == 0) throw std::out_of_range("prefix density needs a non-empty prefix");
  return Rational(BigInt(prefix_weight(w, i)), BigInt(i));
}

std::vector<std::uint64_t> prefix_weights(const FiniteWord& w) {
  std::vector<std::uint64_t> p(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) p[i + 1] = p[i] + w[i];
  return p;
}

PrefixProfile compute_profile(const FiniteWord& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("profile of the empty word is undefined");
  const auto p = prefix_weights(w);
  std::vector<std::uint64_t> hi(n), lo(n);
  for (std::size_t len = 1; len <= n; ++len) {
    std::uint64_t best = 0, worst = len;
    for (std::size_t end = len; end <= n; ++end) {
      std::uint64_t ones = p[end] - p[end - len];
      best = std::max(best, ones);
      worst = std::min(worst, ones);
    }
    hi[len - 1] = best;
    lo[len - 1] = worst;
  }
  return PrefixProfile(std::move(hi), std::move(lo));
}

ParikhVector parikh(const FiniteWord& u) {
  std::uint64_t ones = prefix_weight(u, u.size());
  return {u.size() - ones, ones};
}

FiniteWord complement(const FiniteWord& u) {
  std::vector<Symbol> bits(u.bits().begin(), u.bits().end());
  for (auto& b : bits) b ^= 1;
  return FiniteWord(std::move(bits));
}

FiniteWord reverse(const FiniteWord& u) {
  return FiniteWord(std::vector<Symbol>(u.bits().rbegin(), u.bits().rend()));
}

LexOrder lex_compare(const FiniteWord& u, const FiniteWord& v) {
  const std::size_t common = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? LexOrder::less : LexOrder::greater;
  }
  if (u.size() == v.size()) return LexOrder::equal;
  return u.size() < v.size() ? LexOrder::prefix : LexOrder::greater;
}

bool lex_leq(const FiniteWord& u, const FiniteWord& v) { return lex_compare(u, v) != LexOrder::greater; }

}  // namespace pnw
