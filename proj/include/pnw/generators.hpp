#pragma once

// Producers of infinite binary words: mechanical (Sturmian) words with exact
// slopes, morphic fixpoints, the paperfolding and Champernowne words, and the
// prefix-normal extension operators.

#include <cstdint>
#include <functional>
#include <vector>

#include "pnw/quadratic.hpp"
#include "pnw/stream.hpp"
#include "pnw/word.hpp"

namespace pnw {

// ---------------------------------------------------------------------------
// Mechanical words

/// First n symbols of the lower mechanical word s_{alpha,tau}:
/// floor(alpha*k + tau) - floor(alpha*(k-1) + tau), k >= 1.
///
/// Requires 0 <= alpha <= 1 and 0 <= tau < 1 (std::out_of_range otherwise).
/// A non-zero tau with an irrational alpha raises UnsupportedParameter.
FiniteWord mechanical_lower(const SlopeSpec& alpha, const Rational& tau, std::size_t n);

/// Upper mechanical word s'_{alpha,tau}, the ceiling counterpart.
FiniteWord mechanical_upper(const SlopeSpec& alpha, const Rational& tau, std::size_t n);

/// First n symbols of the characteristic word c_alpha, i.e. symbols 2..n+1 of
/// s'_{alpha,0}. Only irrational slopes in (0,1) are accepted.
FiniteWord characteristic_word(const SlopeSpec& alpha, std::size_t n);

StreamPtr make_mechanical_stream(const SlopeSpec& alpha, const Rational& tau, bool upper);
StreamPtr make_characteristic_stream(const SlopeSpec& alpha);

// ---------------------------------------------------------------------------
// Morphic and arithmetic words

/// Binary morphism with a seed letter whose image starts with the seed.
struct MorphismSpec {
  FiniteWord image0;
  FiniteWord image1;
  Symbol seed = 0;

  static MorphismSpec thue_morse();  // 0 -> 01, 1 -> 10
  static MorphismSpec fibonacci();   // 0 -> 01, 1 -> 0

  /// Throws std::invalid_argument unless the seed image starts with the seed
  /// and has length >= 2.
  void validate() const;
  const FiniteWord& image(Symbol s) const { return s == 0 ? image0 : image1; }
};

/// Prefix of the fixpoint obtained by iterating the morphism on its seed.
FiniteWord morphic_fixpoint(const MorphismSpec& m, std::size_t n);
StreamPtr make_morphic_stream(const MorphismSpec& m);

/// Ordinary paperfolding word: position i = i'*2^k with i' odd gives 0 when
/// i' = 1 (mod 4) and 1 otherwise.
FiniteWord paperfolding(std::size_t n);
StreamPtr make_paperfolding_stream();

/// Binary expansions of 0, 1, 2, ... concatenated.
FiniteWord champernowne(std::size_t n);
StreamPtr make_champernowne_stream();

/// u x x x ... ; x must be non-empty.
StreamPtr make_periodic_stream(FiniteWord preperiod, FiniteWord period);
/// head followed by the symbols of tail.
StreamPtr make_prepended_stream(FiniteWord head, StreamPtr tail);

// ---------------------------------------------------------------------------
// Extension operators

/// w 0^k 1 with the least k keeping the result prefix normal. Requires w
/// prefix normal and containing a 1 (std::invalid_argument otherwise).
FiniteWord flipext(const FiniteWord& w);

/// The limit of iterated flipext started at w.
StreamPtr make_flipext_stream(const FiniteWord& w);

/// w 0^k 1 with k = max{ j : delta(w 0^j) >= alpha }. Requires alpha in (0,1]
/// (std::out_of_range), and w prefix normal with delta(w) >= alpha
/// (std::invalid_argument).
FiniteWord lazy_alpha_flipext(const FiniteWord& w, const SlopeSpec& alpha);

/// The limit of iterated lazy_alpha_flipext started at w. Started at "1" this
/// is the upper mechanical word s'_{alpha,0}.
StreamPtr make_lazy_alpha_flipext_stream(const FiniteWord& w, const SlopeSpec& alpha);

// ---------------------------------------------------------------------------
// Aperiodic prefix normal word with prescribed minimum density

/// One stage v^(i) of the construction, together with the parameters used to
/// build it.
struct DensityStage {
  FiniteWord word;
  Rational target;          // a_i
  std::uint64_t repeats;    // k_i (0 for the first stage)
  std::uint64_t zero_run;   // l_i
};

/// Builds the aperiodic prefix normal word whose minimum density is the limit
/// alpha of a strictly decreasing rational sequence a_1 > a_2 > ... > alpha.
///
/// v^(1) = 1^c 0^(10-c) with c = ceil(10 a_1). For i > 1, v^(i) is the prefix
/// of length k_i |v^(i-1)| of flipext^omega(v^(i-1)) followed by 0^(l_i), where
/// l_i = floor(k_i (|v^(i-1)|_1 - a_i |v^(i-1)|) / a_i) and k_i >= 2 is the least
/// value with l_i > l_{i-1}.
///
/// The sequence is validated lazily: each materialized a_i must lie in
/// (alpha, 1) and be strictly below a_{i-1}.
class AperiodicDensityStream : public WordStream {
 public:
  using Sequence = std::function<Rational(std::size_t)>;  // 1-based

  AperiodicDensityStream(QuadraticNumber alpha, Sequence targets);

  /// a_i = alpha + (a_1 - alpha) / 2^(i-1) for rational alpha.
  static AperiodicDensityStream geometric(const Rational& alpha, const Rational& a1);

  /// Stage i (1-based), materializing earlier stages as needed.
  const DensityStage& stage(std::size_t i);
  std::size_t stages_built() const { return stages_.size(); }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override;

 private:
  void build_next();

  QuadraticNumber alpha_;
  Sequence targets_;
  std::vector<DensityStage> stages_;
};

}  // namespace pnw
