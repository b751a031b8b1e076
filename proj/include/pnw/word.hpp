#pragma once

// Finite binary words and the prefix/factor statistics built on them.
//
// Positions are stored 0-based, but every length-indexed statistic follows the
// usual combinatorics convention: prefix_weight(w, i) counts the first i
// symbols and PrefixProfile::max_ones(i) refers to factors of length i >= 1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnw/rational.hpp"

namespace pnw {

using Symbol = std::uint8_t;

class FiniteWord {
 public:
  FiniteWord() = default;
  /// Throws std::invalid_argument if any entry is not 0 or 1.
  explicit FiniteWord(std::vector<Symbol> bits);

  /// Parses an ASCII string over {'0','1'}.
  static FiniteWord parse(std::string_view text);
  static FiniteWord repeat(Symbol bit, std::size_t count);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Symbol operator[](std::size_t pos) const { return bits_[pos]; }
  std::span<const Symbol> bits() const { return bits_; }

  /// The first `n` symbols; `n` is clamped to size().
  FiniteWord prefix(std::size_t n) const;
  /// The factor of length `len` starting at 0-based `start`.
  FiniteWord factor(std::size_t start, std::size_t len) const;

  void push_back(Symbol bit);
  void append(const FiniteWord& other);
  void append_run(Symbol bit, std::size_t count);

  std::string to_string() const;

  friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  std::vector<Symbol> bits_;
};

std::ostream& operator<<(std::ostream& os, const FiniteWord& w);

/// Pair (|u|_0, |u|_1).
struct ParikhVector {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  std::uint64_t length() const { return zeros + ones; }
  std::string to_string() const;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

/// Maximum and minimum number of 1s over the factors of each length 1..L.
class PrefixProfile {
 public:
  PrefixProfile() = default;
  /// Validates both arrays (monotone, steps in {0,1}, min <= max <= i);
  /// throws std::invalid_argument on violation.
  PrefixProfile(std::vector<std::uint64_t> max_ones, std::vector<std::uint64_t> min_ones);

  std::size_t length() const { return max_ones_.size(); }

  // 1-based accessors, 1 <= i <= length().
  std::uint64_t max_ones(std::size_t i) const { return max_ones_.at(i - 1); }
  std::uint64_t min_ones(std::size_t i) const { return min_ones_.at(i - 1); }
  std::uint64_t max_zeros(std::size_t i) const { return i - min_ones(i); }
  std::uint64_t min_zeros(std::size_t i) const { return i - max_ones(i); }

  std::span<const std::uint64_t> max_ones_array() const { return max_ones_; }
  std::span<const std::uint64_t> min_ones_array() const { return min_ones_; }

  friend bool operator==(const PrefixProfile&, const PrefixProfile&) = default;

 private:
  std::vector<std::uint64_t> max_ones_;
  std::vector<std::uint64_t> min_ones_;
};

enum class LexOrder { less, equal, greater, prefix };

/// P_w(i): number of 1s among the first i symbols. Throws std::out_of_range
/// unless 0 <= i <= |w|.
std::uint64_t prefix_weight(const FiniteWord& w, std::size_t i);

/// D_w(i) = P_w(i)/i. Throws std::out_of_range unless 1 <= i <= |w|.
Rational prefix_density(const FiniteWord& w, std::size_t i);

/// Running prefix sums: result[i] = P_w(i), size |w|+1.
std::vector<std::uint64_t> prefix_weights(const FiniteWord& w);

/// Sliding window over every factor length, O(|w|^2). Throws
/// std::invalid_argument for the empty word.
PrefixProfile compute_profile(const FiniteWord& w);

ParikhVector parikh(const FiniteWord& u);
FiniteWord complement(const FiniteWord& u);
FiniteWord reverse(const FiniteWord& u);

/// Lexicographic order with 0 < 1. `prefix` means u is a strict prefix of v;
/// when v is a strict prefix of u the result is `greater`.
LexOrder lex_compare(const FiniteWord& u, const FiniteWord& v);

/// u <=_lex v, i.e. lex_compare(u, v) is less, equal or prefix.
bool lex_leq(const FiniteWord& u, const FiniteWord& v);

}  // namespace pnw
