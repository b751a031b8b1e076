#include "pnw/analysis.hpp"

#include <cstring>
#include <stdexcept>

#include "pnw/errors.hpp"
#include "pnw/generators.hpp"

namespace pnw {

std::string PNViolation::to_string() const {
  return "len=" + std::to_string(factor_length) + " start=" + std::to_string(factor_start) +
         " ones=" + std::to_string(factor_ones) + " prefix_ones=" + std::to_string(prefix_ones);
}

PNVerdict is_prefix_normal_1(const FiniteWord& w) {
  const std::size_t n = w.size();
  const auto p = prefix_weights(w);
  for (std::size_t len = 1; len < n; ++len) {
    const std::uint64_t pref = p[len];
    if (pref == len) continue;
    for (std::size_t start = 1; start + len <= n; ++start) {
      const std::uint64_t ones = p[start + len] - p[start];
      if (ones > pref) return PNVerdict(PNViolation{start + 1, len, ones, pref});
    }
  }
  return {};
}

PNVerdict is_prefix_normal_0(const FiniteWord& w) { return is_prefix_normal_1(complement(w)); }

PNVerdict check_stream_prefix_normal(WordStream& s, std::size_t L) {
  if (L == 0) throw std::out_of_range("prefix length must be at least 1");
  return is_prefix_normal_1(s.prefix(L));
}

namespace {

FiniteWord first_differences(std::span<const std::uint64_t> values) {
  std::vector<Symbol> bits(values.size());
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bits[i] = static_cast<Symbol>(values[i] - prev);
    prev = values[i];
  }
  return FiniteWord(std::move(bits));
}

void check_length(const PrefixProfile& profile, std::size_t n) {
  if (n == 0 || n > profile.length())
    throw std::out_of_range("factor length " + std::to_string(n) + " outside 1.." + std::to_string(profile.length()));
}

}  // namespace

FiniteWord pnf1(const PrefixProfile& profile) { return first_differences(profile.max_ones_array()); }

// Complementing the steps of F^0(i) = i - f^1(i) yields the steps of f^1.
FiniteWord pnf0(const PrefixProfile& profile) { return first_differences(profile.min_ones_array()); }

std::uint64_t abelian_complexity(const PrefixProfile& profile, std::size_t n) {
  check_length(profile, n);
  return profile.max_ones(n) - profile.min_ones(n) + 1;
}

std::vector<ParikhVector> parikh_set(const PrefixProfile& profile, std::size_t n) {
  check_length(profile, n);
  std::vector<ParikhVector> out;
  for (std::uint64_t y = profile.min_ones(n); y <= profile.max_ones(n); ++y) out.push_back({n - y, y});
  return out;
}

std::string format_parikh_set(const std::vector<ParikhVector>& set) {
  std::string s;
  for (const auto& pv : set) {
    if (!s.empty()) s += ' ';
    s += pv.to_string();
  }
  return s;
}

MinDensityReport min_density(const FiniteWord& w) {
  if (w.empty()) throw std::invalid_argument("minimum density of the empty word is undefined");
  using u128 = unsigned __int128;
  std::uint64_t best_ones = w[0], best_len = 1, ones = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    ones += w[i - 1];
    if (static_cast<u128>(ones) * best_len < static_cast<u128>(best_ones) * i) {
      best_ones = ones;
      best_len = i;
    }
  }
  return {Rational(BigInt(best_ones), BigInt(best_len)), best_len, best_ones};
}

namespace {

FiniteWord primitive_root(const FiniteWord& x) {
  const std::size_t n = x.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = x[i] == x[i - p];
    if (periodic) return x.prefix(p);
  }
  return x;
}

}  // namespace

UltimatelyPeriodicWord::UltimatelyPeriodicWord(FiniteWord preperiod, FiniteWord period)
    : u_(std::move(preperiod)), x_(std::move(period)) {
  if (x_.empty()) throw std::invalid_argument("period must be non-empty");
  x_ = primitive_root(x_);
  // Fold trailing preperiod symbols into the period by rotating it.
  std::vector<Symbol> u(u_.bits().begin(), u_.bits().end());
  std::vector<Symbol> x(x_.bits().begin(), x_.bits().end());
  while (!u.empty() && u.back() == x.back()) {
    u.pop_back();
    x.insert(x.begin(), x.back());
    x.pop_back();
  }
  u_ = FiniteWord(std::move(u));
  x_ = FiniteWord(std::move(x));
}

FiniteWord UltimatelyPeriodicWord::prefix(std::size_t n) const { return stream()->prefix(n); }

StreamPtr UltimatelyPeriodicWord::stream() const { return make_periodic_stream(u_, x_); }

// For n >= |u| write n = |u| + i + k|x| with 0 <= i < |x|. Along each residue
// class the density (A + kB)/(C + kD) moves monotonically from A/C towards
// B/D = delta(x), so the infimum is reached either within the first |u| + |x|
// prefixes or in the limit delta(x).
Rational min_density_up(const UltimatelyPeriodicWord& w) {
  const std::size_t span = w.preperiod().size() + w.period().size();
  Rational head = min_density(w.prefix(span)).delta;
  ParikhVector px = parikh(w.period());
  Rational tail(BigInt(px.ones), BigInt(px.length()));
  return head < tail ? head : tail;
}

bool is_c_balanced(const PrefixProfile& profile, std::uint64_t c) {
  for (std::size_t i = 1; i <= profile.length(); ++i) {
    if (profile.max_ones(i) - profile.min_ones(i) > c) return false;
  }
  return true;
}

bool is_c_balanced(const FiniteWord& w, std::uint64_t c) {
  if (w.empty()) return true;
  return is_c_balanced(compute_profile(w), c);
}

std::uint64_t prepend_ones_bound(const PrefixProfile& profile, std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("balance constant must be positive");
  if (!is_c_balanced(profile, c)) throw std::invalid_argument("word is not " + std::to_string(c) + "-balanced");
  // The longest run of 1s is the largest r with F^1(r) = r.
  std::size_t run = 0;
  while (run < profile.length() && profile.max_ones(run + 1) == run + 1) ++run;
  if (run == profile.length()) throw NoBoundError("every observed length has an all-ones factor");
  return (run + 1) * c;
}

std::uint64_t sturmian_prepend_bound(const SlopeSpec& alpha) {
  const QuadraticNumber& a = alpha.value();
  if (a.sign() <= 0 || a.compare(Rational(1)) >= 0)
    throw std::out_of_range("slope must lie in (0,1), got " + alpha.to_string());
  QuadraticNumber gap = -a + Rational(1);
  return gap.reciprocal().ceil().convert_to<std::uint64_t>();
}

std::optional<std::uint64_t> empirical_min_prepend(WordStream& s, std::size_t L, std::uint64_t kmax) {
  const FiniteWord body = s.prefix(L);
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    if (is_prefix_normal_1(FiniteWord::repeat(1, k) + body).normal()) return k;
  }
  return std::nullopt;
}

// Prenecklace recognition with 1 > 0: p tracks the length of the current
// Lyndon-like period.
bool is_prenecklace_prefix(const FiniteWord& w) {
  std::size_t p = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[i - p]) return false;
    if (w[i] < w[i - p]) p = i + 1;
  }
  return true;
}

namespace {

FiniteWord extreme_factor(const FiniteWord& w, std::size_t n, bool greatest) {
  if (n > w.size()) throw std::out_of_range("factor length exceeds word length");
  if (n == 0) return {};
  const Symbol* data = w.bits().data();
  std::size_t best = 0;
  for (std::size_t start = 1; start + n <= w.size(); ++start) {
    int cmp = std::memcmp(data + start, data + best, n);
    if (greatest ? cmp > 0 : cmp < 0) best = start;
  }
  return w.factor(best, n);
}

}  // namespace

FiniteWord max_word(const FiniteWord& w, std::size_t n) { return extreme_factor(w, n, true); }

FiniteWord min_word(const FiniteWord& w, std::size_t n) { return extreme_factor(w, n, false); }

}  // namespace pnw
