// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "pnw/analysis.hpp"
#include "pnw/generators.hpp"
#include "pnw/jumbled_index.hpp"

using namespace pnw;

namespace {

FiniteWord W(const char* s) { return FiniteWord::parse(s); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::vector<SlopeSpec> four_slopes() {
  return {SlopeSpec::rational(1, 3), SlopeSpec::rational(2, 5), SlopeSpec::quadratic(-1, 1, 1, 2),
          SlopeSpec::quadratic(-1, 1, 2, 5)};
}

std::string csv(const PrefixProfile& p, std::size_t n, bool zeros) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? "," : "") + std::to_string(zeros ? p.max_zeros(i) : p.max_ones(i));
  return s;
}

// Checks every library answer for w against the brute-force oracles.
void cross_check(Outcome& o, const FiniteWord& w) {
  const std::string tag = " for " + w.to_string();
  o.expect(is_prefix_normal_1(w).normal() == oracle::is_prefix_normal(w), "prefix normality" + tag);
  auto profile = compute_profile(w);
  auto idx = JumbledIndex::build(w);
  for (std::size_t n = 1; n <= w.size(); ++n) {
    auto vecs = oracle::parikh_vectors(w, n);
    // ordered by number of 0s, so the first entry has the most 1s
    o.expect(profile.max_ones(n) == vecs.begin()->second && profile.min_ones(n) == vecs.rbegin()->second,
             "profile" + tag);
    o.expect(abelian_complexity(profile, n) == vecs.size(), "abelian complexity" + tag);
    for (std::uint64_t ones = 0; ones <= n; ++ones) {
      o.expect(idx.query(n - ones, ones) == (vecs.count({n - ones, ones}) == 1), "jumbled query" + tag);
    }
  }
  o.expect(!idx.query(0, 0) && !idx.query(w.size() + 1, 0) && !idx.query(0, w.size() + 1), "jumbled bounds" + tag);
}

}  // namespace

int main() {
  criterion(1, "max-weight rows and prefix normal forms of the Fibonacci word", 1.0, [](Outcome& o) {
    auto profile = compute_profile(morphic_fixpoint(MorphismSpec::fibonacci(), 2048));
    o.expect(csv(profile, 20, true) == "1,2,2,3,4,4,5,5,6,7,7,8,9,9,10,10,11,12,12,13", "F0 row");
    o.expect(csv(profile, 20, false) == "1,1,2,2,2,3,3,4,4,4,5,5,5,6,6,7,7,7,8,8", "F1 row");
    o.expect(pnf0(profile).prefix(20) == W("00100101001001010010"), "PNF0 row");
    o.expect(pnf1(profile).prefix(20) == W("10100101001001010010"), "PNF1 row");
  });

  criterion(2, "paperfolding abelian complexity 1..20", 5.0, [](Outcome& o) {
    auto profile = compute_profile(make_paperfolding_stream()->prefix(2048));
    const std::uint64_t want[] = {2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5};
    for (std::size_t n = 1; n <= 20; ++n) {
      o.expect(abelian_complexity(profile, n) == want[n - 1], "psi(" + std::to_string(n) + ")");
    }
  });

  criterion(3, "Thue-Morse abelian complexity and prefix normal forms", 0, [](Outcome& o) {
    const std::size_t L = 8192, window = L / 4;
    auto profile = compute_profile(make_morphic_stream(MorphismSpec::thue_morse())->prefix(L));
    for (std::size_t n = 1; n <= 512; ++n) {
      o.expect(abelian_complexity(profile, n) == (n % 2 == 1 ? 2u : 3u), "psi(" + std::to_string(n) + ")");
    }
    auto p1 = pnf1(profile), p0 = pnf0(profile);
    for (std::size_t i = 0; i < window; ++i) {
      const Symbol one = i == 0 ? 1 : (i % 2 == 1 ? 1 : 0);
      const Symbol zero = i == 0 ? 0 : (i % 2 == 1 ? 0 : 1);
      o.expect(p1[i] == one, "PNF1 differs from 1(10)^w at " + std::to_string(i + 1));
      o.expect(p0[i] == zero, "PNF0 differs from 0(01)^w at " + std::to_string(i + 1));
    }
  });

  criterion(4, "least number of 1s to prepend", 30.0, [](Outcome& o) {
    auto tm = make_morphic_stream(MorphismSpec::thue_morse());
    auto fib = make_morphic_stream(MorphismSpec::fibonacci());
    auto ch = make_champernowne_stream();
    auto k_tm = empirical_min_prepend(*tm, 10000, 8);
    auto k_fib = empirical_min_prepend(*fib, 10000, 4);
    auto k_ch = empirical_min_prepend(*ch, 10000, 12);
    o.expect(k_tm == 2u, "Thue-Morse");
    o.expect(k_fib == 1u, "Fibonacci");
    o.expect(!k_ch.has_value(), "Champernowne");
  });

  criterion(5, "lazy extension from 1 equals the upper mechanical word", 0, [](Outcome& o) {
    for (const auto& alpha : four_slopes()) {
      auto lazy = make_lazy_alpha_flipext_stream(W("1"), alpha)->prefix(10000);
      o.expect(lazy == mechanical_upper(alpha, Rational(0), 10000), "slope " + alpha.to_string());
    }
  });

  criterion(6, "upper mechanical words are prefix normal, lower ones are not", 0, [](Outcome& o) {
    for (const auto& alpha : four_slopes()) {
      auto upper = make_mechanical_stream(alpha, Rational(0), true);
      o.expect(check_stream_prefix_normal(*upper, 10000).normal(), "upper word, slope " + alpha.to_string());
      if (!alpha.is_rational()) {
        auto lower = make_mechanical_stream(alpha, Rational(0), false);
        o.expect(!check_stream_prefix_normal(*lower, 10000).normal(), "lower word, slope " + alpha.to_string());
      }
    }
  });

  criterion(7, "brute-force oracle agreement", 120.0, [](Outcome& o) {
    std::size_t words = 0;
    for (std::size_t len = 1; len <= 14; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits, ++words) {
        cross_check(o, oracle::from_index(bits, len));
      }
    }
    o.expect(words == 32766, "exhaustive word count");
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
      cross_check(o, oracle::random_word(rng, 1 + rng() % 256, 0.5));
    }
  });

  criterion(8, "minimum density is preserved and computed exactly", 0, [](Outcome& o) {
    std::mt19937_64 rng(77);
    int seeds = 0;
    while (seeds < 20) {
      auto w = oracle::random_word(rng, 1 + rng() % 16, 0.6);
      if (w[0] != 1 || !oracle::is_prefix_normal(w)) continue;
      ++seeds;
      auto d = oracle::min_density(w);
      for (int it = 0; it < 10; ++it) {
        w = flipext(w);
        auto got = min_density(w);
        o.expect(got.delta == d.delta && got.iota == d.iota && got.kappa == d.kappa, "flipext changed delta");
      }
    }
    for (int trial = 0; trial < 500; ++trial) {
      auto u = oracle::random_word(rng, rng() % 16, 0.5);
      auto x = oracle::random_word(rng, 1 + rng() % 10, 0.5);
      FiniteWord long_prefix = u;
      for (int k = 0; k < 50; ++k) long_prefix = long_prefix + x;
      Rational inf = oracle::min_density(long_prefix).delta;
      Rational limit{BigInt(oracle::count_ones(x, 0, x.size())), BigInt(x.size())};
      if (limit < inf) inf = limit;
      o.expect(min_density_up(UltimatelyPeriodicWord(u, x)) == inf, "u=" + u.to_string() + " x=" + x.to_string());
    }
  });

  criterion(9, "aperiodic construction with minimum density 2/5", 0, [](Outcome& o) {
    auto s = AperiodicDensityStream::geometric(Rational(2, 5), Rational(1, 2));
    for (std::size_t i = 1; i <= 6; ++i) {
      const auto& st = s.stage(i);
      const std::string at = " at stage " + std::to_string(i);
      auto d = min_density(st.word);
      o.expect(d.delta >= st.target, "density below a_i" + at);
      o.expect(d.iota == st.word.size(), "least index is not the length" + at);
      if (i > 1) o.expect(st.zero_run > s.stage(i - 1).zero_run, "zero runs not increasing" + at);
      o.expect(is_prefix_normal_1(st.word).normal(), "not prefix normal" + at);
    }
  });

  criterion(10, "lexicographic properties", 0, [](Outcome& o) {
    const std::size_t L = 2048;
    struct Named {
      std::string name;
      FiniteWord w;
    };
    auto up = [](StreamPtr s) { return s->prefix(2048); };
    std::vector<Named> words = {
        {"fibonacci", up(make_morphic_stream(MorphismSpec::fibonacci()))},
        {"thue-morse", up(make_morphic_stream(MorphismSpec::thue_morse()))},
        {"paperfolding", up(make_paperfolding_stream())},
        {"champernowne", up(make_champernowne_stream())},
        {"1 fibonacci", up(make_prepended_stream(W("1"), make_morphic_stream(MorphismSpec::fibonacci())))},
        {"11 thue-morse", up(make_prepended_stream(W("11"), make_morphic_stream(MorphismSpec::thue_morse())))},
        {"mechanical upper", up(make_mechanical_stream(SlopeSpec::quadratic(-1, 1, 1, 2), Rational(0), true))},
        {"mechanical lower", up(make_mechanical_stream(SlopeSpec::rational(2, 5), Rational(1, 3), false))},
        {"characteristic", up(make_characteristic_stream(SlopeSpec::quadratic(-1, 1, 2, 5)))},
        {"flipext-omega", up(make_flipext_stream(W("1101")))},
        {"lazy-flipext-omega", up(make_lazy_alpha_flipext_stream(W("1"), SlopeSpec::rational(3, 7)))},
        {"aperiodic-density", up(std::make_unique<AperiodicDensityStream>(QuadraticNumber(Rational(2, 5)), [](std::size_t i) {
           return Rational(2, 5) + Rational(1, 10) / Rational(BigInt(1) << (i - 1));
         }))},
    };
    int normal = 0;
    for (const auto& [name, w] : words) {
      if (is_prefix_normal_1(w).normal()) {
        ++normal;
        o.expect(is_prenecklace_prefix(w), name + ": prefix normal but not a prenecklace");
      }
      auto profile = compute_profile(w);
      auto p1 = pnf1(profile), p0 = pnf0(profile);
      for (std::size_t n = 1; n <= 512; ++n) {
        o.expect(lex_leq(max_word(w, n), p1.prefix(n)), name + ": PNF1 below max word");
        o.expect(lex_leq(p0.prefix(n), min_word(w, n)), name + ": PNF0 above min word");
      }
    }
    o.expect(normal >= 6, "too few prefix normal samples");

    FiniteWord x = W("11100");
    while (x.size() < L) x = x + W("110");
    x = x.prefix(L);
    o.expect(is_prenecklace_prefix(x), "11100(110)^w prefix is not a prenecklace");
    o.expect(!is_prefix_normal_1(x).normal(), "11100(110)^w prefix is prefix normal");

    for (const auto& alpha : {SlopeSpec::quadratic(-1, 1, 1, 2), SlopeSpec::quadratic(-1, 1, 2, 5),
                              SlopeSpec::quadratic(3, -1, 2, 5)}) {
      auto c = characteristic_word(alpha, L);
      for (std::size_t n = 1; n <= 512; ++n) {
        o.expect(max_word(c, n) == (W("1") + c).prefix(n), "max word of c, slope " + alpha.to_string());
        o.expect(min_word(c, n) == (W("0") + c).prefix(n), "min word of c, slope " + alpha.to_string());
      }
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
