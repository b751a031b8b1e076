#pragma once

// Prefix normality, prefix normal forms, abelian complexity, minimum density
// and lexicographic predicates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnw/quadratic.hpp"
#include "pnw/stream.hpp"
#include "pnw/word.hpp"

namespace pnw {

/// Witness that a word is not prefix normal: the factor of length
/// `factor_length` starting at 1-based position `factor_start` has
/// `factor_ones` occurrences of the checked letter while the prefix of the same
/// length has only `prefix_ones`. For 0-prefix normality the counts are of 0s.
struct PNViolation {
  std::uint64_t factor_start = 0;
  std::uint64_t factor_length = 0;
  std::uint64_t factor_ones = 0;
  std::uint64_t prefix_ones = 0;

  /// "len=<L> start=<i> ones=<a> prefix_ones=<b>"
  std::string to_string() const;
  friend bool operator==(const PNViolation&, const PNViolation&) = default;
};

class PNVerdict {
 public:
  PNVerdict() = default;
  explicit PNVerdict(PNViolation v) : violation_(v) {}

  bool normal() const { return !violation_.has_value(); }
  const std::optional<PNViolation>& violation() const { return violation_; }

 private:
  std::optional<PNViolation> violation_;
};

/// Reports the violating factor of least length, then least start.
PNVerdict is_prefix_normal_1(const FiniteWord& w);
/// Same check on 0s; equals is_prefix_normal_1(complement(w)).
PNVerdict is_prefix_normal_0(const FiniteWord& w);

/// Checks the length-L prefix; prefix normality of it implies that of all
/// shorter prefixes. Throws std::out_of_range for L == 0.
PNVerdict check_stream_prefix_normal(WordStream& s, std::size_t L);

/// First differences of F^1.
FiniteWord pnf1(const PrefixProfile& profile);
/// Complemented first differences of F^0.
FiniteWord pnf0(const PrefixProfile& profile);

/// psi(n) = F^1(n) - f^1(n) + 1. Throws std::out_of_range unless
/// 1 <= n <= profile.length().
std::uint64_t abelian_complexity(const PrefixProfile& profile, std::size_t n);

/// All Parikh vectors of length-n factors, ascending by number of 1s.
std::vector<ParikhVector> parikh_set(const PrefixProfile& profile, std::size_t n);

/// "(z,o) (z,o) ..."
std::string format_parikh_set(const std::vector<ParikhVector>& set);

struct MinDensityReport {
  Rational delta;
  std::uint64_t iota = 0;   // least index attaining delta
  std::uint64_t kappa = 0;  // P_w(iota)

  friend bool operator==(const MinDensityReport&, const MinDensityReport&) = default;
};

/// Throws std::invalid_argument for the empty word.
MinDensityReport min_density(const FiniteWord& w);

/// The infinite word u x^omega, kept in a canonical form: x is replaced by its
/// primitive root and the preperiod is shortened as far as possible, so that
/// two equal infinite words have equal representations.
class UltimatelyPeriodicWord {
 public:
  /// Throws std::invalid_argument for an empty period.
  UltimatelyPeriodicWord(FiniteWord preperiod, FiniteWord period);

  const FiniteWord& preperiod() const { return u_; }
  const FiniteWord& period() const { return x_; }

  FiniteWord prefix(std::size_t n) const;
  StreamPtr stream() const;

  friend bool operator==(const UltimatelyPeriodicWord&, const UltimatelyPeriodicWord&) = default;

 private:
  FiniteWord u_;
  FiniteWord x_;
};

/// Exact minimum density of u x^omega: the smaller of the least prefix density
/// within the first |u| + |x| positions and the density of x.
Rational min_density_up(const UltimatelyPeriodicWord& w);

/// True iff any two equal-length factors differ by at most c in their number
/// of 1s, i.e. F^1(i) - f^1(i) <= c for every i.
bool is_c_balanced(const FiniteWord& w, std::uint64_t c);
bool is_c_balanced(const PrefixProfile& profile, std::uint64_t c);

/// n*c where n is one more than the longest run of 1s in the profiled word:
/// prepending that many 1s to a c-balanced word makes it prefix normal.
/// Throws std::invalid_argument if the profile is not c-balanced and
/// NoBoundError if the word is all 1s.
std::uint64_t prepend_ones_bound(const PrefixProfile& profile, std::uint64_t c);

/// ceil(1/(1-alpha)) for a slope alpha in (0,1): enough 1s to make any
/// Sturmian word of that slope prefix normal.
std::uint64_t sturmian_prepend_bound(const SlopeSpec& alpha);

/// Least k <= kmax such that 1^k s.prefix(L) is prefix normal.
std::optional<std::uint64_t> empirical_min_prepend(WordStream& s, std::size_t L, std::uint64_t kmax);

/// True iff every suffix of w is <=_lex the prefix of w of the same length.
bool is_prenecklace_prefix(const FiniteWord& w);

/// Lexicographically greatest / smallest factor of length n.
/// Throws std::out_of_range if n > |w|.
FiniteWord max_word(const FiniteWord& w, std::size_t n);
FiniteWord min_word(const FiniteWord& w, std::size_t n);

}  // namespace pnw
