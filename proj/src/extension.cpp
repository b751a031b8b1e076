#include <stdexcept>

#include "pnw/analysis.hpp"
#include "pnw/errors.hpp"
#include "pnw/generators.hpp"

namespace pnw {

namespace {

void require_extendable(const FiniteWord& w) {
  if (!is_prefix_normal_1(w).normal()) throw std::invalid_argument("word is not prefix normal: " + w.to_string());
  if (prefix_weight(w, w.size()) == 0) throw std::invalid_argument("word must contain a 1");
}

// Appends 0^k 1 to `word` for the least k keeping it prefix normal. `weights`
// holds the prefix sums of `word` and is updated alongside it. The word must
// already be prefix normal and start with 1.
//
// Only factors ending at the new 1 can violate the condition; those of length
// t <= k+1 hold a single 1 and never do.
void flipext_step(std::vector<Symbol>& word, std::vector<std::uint64_t>& weights) {
  const std::size_t m = word.size();
  const std::uint64_t total = weights[m];
  std::size_t k = 0;
  for (;; ++k) {
    bool ok = true;
    // Suffix of length t = s + 1 + k covers the last s symbols of `word`.
    for (std::size_t s = 1; s < m && ok; ++s) {
      const std::size_t t = s + 1 + k;
      const std::uint64_t suffix_ones = 1 + total - weights[m - s];
      const std::uint64_t prefix_ones = t <= m ? weights[t] : total;
      ok = suffix_ones <= prefix_ones;
    }
    if (ok) break;
  }
  word.insert(word.end(), k, 0);
  word.push_back(1);
  weights.reserve(word.size() + 1);
  for (std::size_t i = 0; i < k; ++i) weights.push_back(total);
  weights.push_back(total + 1);
}

class FlipextStream : public WordStream {
 public:
  explicit FlipextStream(const FiniteWord& w) : seed_(w) { require_extendable(w); }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    if (out.empty()) {
      out.assign(seed_.bits().begin(), seed_.bits().end());
      weights_ = prefix_weights(seed_);
    }
    while (out.size() < n) flipext_step(out, weights_);
  }

 private:
  FiniteWord seed_;
  std::vector<std::uint64_t> weights_;
};

void require_lazy_preconditions(const FiniteWord& w, const SlopeSpec& alpha) {
  const QuadraticNumber& a = alpha.value();
  if (a.sign() <= 0 || a.compare(Rational(1)) > 0)
    throw std::out_of_range("slope must lie in (0,1], got " + alpha.to_string());
  if (w.empty()) throw std::invalid_argument("word must be non-empty");
  if (!is_prefix_normal_1(w).normal()) throw std::invalid_argument("word is not prefix normal: " + w.to_string());
  if (a.compare(min_density(w).delta) > 0)
    throw std::invalid_argument("minimum density of the word is below the slope");
}

// Given delta(w) >= alpha, delta(w 0^j) = min(delta(w), P/(|w|+j)), so the
// largest admissible j is floor(P/alpha) - |w|.
std::uint64_t lazy_zero_run(const QuadraticNumber& inverse_alpha, std::uint64_t ones, std::uint64_t length) {
  BigInt reach = (inverse_alpha * Rational(ones)).floor();
  return (reach - length).convert_to<std::uint64_t>();
}

class LazyFlipextStream : public WordStream {
 public:
  LazyFlipextStream(const FiniteWord& w, const SlopeSpec& alpha) : seed_(w) {
    require_lazy_preconditions(w, alpha);
    inverse_alpha_ = alpha.value().reciprocal();
    ones_ = prefix_weight(w, w.size());
  }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    if (out.empty()) out.assign(seed_.bits().begin(), seed_.bits().end());
    while (out.size() < n) {
      std::uint64_t k = lazy_zero_run(inverse_alpha_, ones_, out.size());
      if (k > kMaxMaterialization) throw ResourceError("zero run exceeds the materialization cap");
      out.insert(out.end(), k, 0);
      out.push_back(1);
      ++ones_;
    }
  }

 private:
  FiniteWord seed_;
  QuadraticNumber inverse_alpha_;
  std::uint64_t ones_ = 0;
};

}  // namespace

FiniteWord flipext(const FiniteWord& w) {
  require_extendable(w);
  std::vector<Symbol> word(w.bits().begin(), w.bits().end());
  auto weights = prefix_weights(w);
  flipext_step(word, weights);
  return FiniteWord(std::move(word));
}

StreamPtr make_flipext_stream(const FiniteWord& w) { return std::make_unique<FlipextStream>(w); }

FiniteWord lazy_alpha_flipext(const FiniteWord& w, const SlopeSpec& alpha) {
  require_lazy_preconditions(w, alpha);
  std::uint64_t ones = prefix_weight(w, w.size());
  std::uint64_t k = lazy_zero_run(alpha.value().reciprocal(), ones, w.size());
  if (k > kMaxMaterialization) throw ResourceError("zero run exceeds the materialization cap");
  FiniteWord v = w;
  v.append_run(0, k);
  v.push_back(1);
  return v;
}

StreamPtr make_lazy_alpha_flipext_stream(const FiniteWord& w, const SlopeSpec& alpha) {
  return std::make_unique<LazyFlipextStream>(w, alpha);
}

// ---------------------------------------------------------------------------

AperiodicDensityStream::AperiodicDensityStream(QuadraticNumber alpha, Sequence targets)
    : alpha_(std::move(alpha)), targets_(std::move(targets)) {
  if (alpha_.sign() <= 0 || alpha_.compare(Rational(1)) >= 0)
    throw std::out_of_range("target density must lie in (0,1), got " + alpha_.to_string());
  if (!targets_) throw std::invalid_argument("missing target sequence");
}

AperiodicDensityStream AperiodicDensityStream::geometric(const Rational& alpha, const Rational& a1) {
  if (a1 <= alpha || a1 >= Rational(1)) throw std::invalid_argument("a_1 must lie in (alpha, 1)");
  return AperiodicDensityStream(QuadraticNumber(alpha), [alpha, a1](std::size_t i) {
    return alpha + (a1 - alpha) / Rational(BigInt(1) << (i - 1));
  });
}

const DensityStage& AperiodicDensityStream::stage(std::size_t i) {
  if (i == 0) throw std::out_of_range("stages are numbered from 1");
  while (stages_.size() < i) build_next();
  return stages_[i - 1];
}

void AperiodicDensityStream::extend(std::vector<Symbol>& out, std::size_t n) {
  while (stages_.empty() || stages_.back().word.size() < n) build_next();
  auto bits = stages_.back().word.bits();
  out.assign(bits.begin(), bits.end());
}

void AperiodicDensityStream::build_next() {
  const std::size_t i = stages_.size() + 1;
  Rational a = targets_(i);
  if (a.sign() <= 0 || a >= Rational(1))
    throw std::invalid_argument("a_" + std::to_string(i) + " = " + a.to_string() + " is outside (0,1)");
  if (alpha_.compare(a) >= 0)
    throw std::invalid_argument("a_" + std::to_string(i) + " = " + a.to_string() + " does not exceed the target");
  if (!stages_.empty() && a >= stages_.back().target)
    throw std::invalid_argument("target sequence is not strictly decreasing at index " + std::to_string(i));

  if (i == 1) {
    const auto ones = (a * Rational(10)).ceil().convert_to<std::size_t>();
    FiniteWord w = FiniteWord::repeat(1, ones);
    w.append_run(0, 10 - ones);
    stages_.push_back({std::move(w), a, 0, 10 - ones});
    return;
  }

  const DensityStage& prev = stages_.back();
  const std::uint64_t m = prev.word.size();
  const std::uint64_t p = prefix_weight(prev.word, m);
  // l_i(k) = floor(k * slack) with slack > 0; want the least k >= 2 with
  // l_i(k) >= l_{i-1} + 1.
  const Rational slack = (Rational(p) - a * Rational(m)) / a;
  if (slack.sign() <= 0) throw std::logic_error("stage density fell below its target");
  BigInt k = (Rational(prev.zero_run + 1) / slack).ceil();
  if (k < 2) k = 2;
  const BigInt run = (slack * Rational(k)).floor();
  const BigInt total = k * m + run;
  if (total > kMaxMaterialization) throw ResourceError("stage " + std::to_string(i) + " exceeds the materialization cap");

  const auto repeats = k.convert_to<std::uint64_t>();
  const auto zero_run = run.convert_to<std::uint64_t>();
  FiniteWord w = make_flipext_stream(prev.word)->prefix(repeats * m);
  w.append_run(0, zero_run);
  stages_.push_back({std::move(w), a, repeats, zero_run});
}

}  // namespace pnw
