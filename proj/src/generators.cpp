#include "pnw/generators.hpp"

#include <bit>
#include <stdexcept>

#include "pnw/errors.hpp"

namespace pnw {

namespace {

void check_mechanical_parameters(const SlopeSpec& alpha, const Rational& tau) {
  const QuadraticNumber& a = alpha.value();
  if (a.sign() < 0 || a.compare(Rational(1)) > 0)
    throw std::out_of_range("slope must lie in [0,1], got " + alpha.to_string());
  if (tau.sign() < 0 || tau >= Rational(1))
    throw std::out_of_range("intercept must lie in [0,1), got " + tau.to_string());
  if (!alpha.is_rational() && tau.sign() != 0)
    throw UnsupportedParameter("irrational slopes only support intercept 0");
}

// Emits floor (or ceil) differences of alpha*k + tau for k = 1, 2, ...
class MechanicalStream : public WordStream {
 public:
  MechanicalStream(const SlopeSpec& alpha, const Rational& tau, bool upper, std::size_t skip)
      : alpha_(alpha.value()), tau_(tau), upper_(upper), skip_(skip) {
    check_mechanical_parameters(alpha, tau);
    prev_ = value_at(0);
  }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    while (out.size() < n) {
      ++index_;
      BigInt cur = value_at(index_);
      BigInt diff = cur - prev_;
      prev_ = std::move(cur);
      if (skip_ > 0) {
        --skip_;
        continue;
      }
      out.push_back(static_cast<Symbol>(diff.convert_to<int>()));
    }
  }

 private:
  BigInt value_at(std::uint64_t k) const {
    QuadraticNumber x = alpha_ * Rational(k) + tau_;
    return upper_ ? x.ceil() : x.floor();
  }

  QuadraticNumber alpha_;
  Rational tau_;
  bool upper_;
  std::size_t skip_;
  std::uint64_t index_ = 0;
  BigInt prev_;
};

class MorphicStream : public WordStream {
 public:
  explicit MorphicStream(MorphismSpec m) : m_(std::move(m)) {
    m_.validate();
    current_.push_back(m_.seed);
  }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    while (current_.size() < n) {
      std::vector<Symbol> next;
      next.reserve(current_.size() * 2);
      for (Symbol s : current_) {
        auto img = m_.image(s).bits();
        next.insert(next.end(), img.begin(), img.end());
      }
      if (next.size() <= current_.size())
        throw std::invalid_argument("morphism iteration stalls; the fixpoint is finite");
      current_ = std::move(next);
    }
    out = current_;
  }

 private:
  MorphismSpec m_;
  std::vector<Symbol> current_;
};

class PaperfoldingStream : public WordStream {
 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    while (out.size() < n) {
      std::uint64_t i = out.size() + 1;
      std::uint64_t odd = i >> std::countr_zero(i);
      out.push_back(odd % 4 == 1 ? 0 : 1);
    }
  }
};

class ChampernowneStream : public WordStream {
 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    while (out.size() < n) {
      if (next_ == 0) {
        out.push_back(0);
      } else {
        int width = std::bit_width(next_);
        for (int b = width - 1; b >= 0; --b) out.push_back(static_cast<Symbol>((next_ >> b) & 1U));
      }
      ++next_;
    }
  }

 private:
  std::uint64_t next_ = 0;
};

class PeriodicStream : public WordStream {
 public:
  PeriodicStream(FiniteWord u, FiniteWord x) : u_(std::move(u)), x_(std::move(x)) {
    if (x_.empty()) throw std::invalid_argument("period must be non-empty");
  }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    while (out.size() < n) {
      std::size_t i = out.size();
      out.push_back(i < u_.size() ? u_[i] : x_[(i - u_.size()) % x_.size()]);
    }
  }

 private:
  FiniteWord u_;
  FiniteWord x_;
};

class PrependedStream : public WordStream {
 public:
  PrependedStream(FiniteWord head, StreamPtr tail) : head_(std::move(head)), tail_(std::move(tail)) {
    if (!tail_) throw std::invalid_argument("missing tail stream");
  }

 protected:
  void extend(std::vector<Symbol>& out, std::size_t n) override {
    if (out.empty()) out.assign(head_.bits().begin(), head_.bits().end());
    if (out.size() >= n) return;
    FiniteWord rest = tail_->prefix(n - head_.size());
    out.insert(out.end(), rest.bits().begin() + static_cast<std::ptrdiff_t>(out.size() - head_.size()),
               rest.bits().end());
  }

 private:
  FiniteWord head_;
  StreamPtr tail_;
};

}  // namespace

FiniteWord mechanical_lower(const SlopeSpec& alpha, const Rational& tau, std::size_t n) {
  return make_mechanical_stream(alpha, tau, false)->prefix(n);
}

FiniteWord mechanical_upper(const SlopeSpec& alpha, const Rational& tau, std::size_t n) {
  return make_mechanical_stream(alpha, tau, true)->prefix(n);
}

FiniteWord characteristic_word(const SlopeSpec& alpha, std::size_t n) {
  return make_characteristic_stream(alpha)->prefix(n);
}

StreamPtr make_mechanical_stream(const SlopeSpec& alpha, const Rational& tau, bool upper) {
  return std::make_unique<MechanicalStream>(alpha, tau, upper, 0);
}

StreamPtr make_characteristic_stream(const SlopeSpec& alpha) {
  if (alpha.is_rational())
    throw UnsupportedParameter("characteristic words are only provided for irrational slopes");
  return std::make_unique<MechanicalStream>(alpha, Rational(0), true, 1);
}

MorphismSpec MorphismSpec::thue_morse() {
  return {FiniteWord::parse("01"), FiniteWord::parse("10"), 0};
}

MorphismSpec MorphismSpec::fibonacci() {
  return {FiniteWord::parse("01"), FiniteWord::parse("0"), 0};
}

void MorphismSpec::validate() const {
  if (seed > 1) throw std::invalid_argument("seed must be 0 or 1");
  const FiniteWord& img = image(seed);
  if (img.size() < 2 || img[0] != seed)
    throw std::invalid_argument("morphism is not prolongable on its seed");
}

FiniteWord morphic_fixpoint(const MorphismSpec& m, std::size_t n) { return make_morphic_stream(m)->prefix(n); }

StreamPtr make_morphic_stream(const MorphismSpec& m) { return std::make_unique<MorphicStream>(m); }

FiniteWord paperfolding(std::size_t n) { return make_paperfolding_stream()->prefix(n); }

StreamPtr make_paperfolding_stream() { return std::make_unique<PaperfoldingStream>(); }

FiniteWord champernowne(std::size_t n) { return make_champernowne_stream()->prefix(n); }

StreamPtr make_champernowne_stream() { return std::make_unique<ChampernowneStream>(); }

StreamPtr make_periodic_stream(FiniteWord preperiod, FiniteWord period) {
  return std::make_unique<PeriodicStream>(std::move(preperiod), std::move(period));
}

StreamPtr make_prepended_stream(FiniteWord head, StreamPtr tail) {
  return std::make_unique<PrependedStream>(std::move(head), std::move(tail));
}

}  // namespace pnw
