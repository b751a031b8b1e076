#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pnw/errors.hpp"
#include "pnw/generators.hpp"
#include "pnw/jumbled_index.hpp"

using namespace pnw;

namespace {

FiniteWord W(const char* s) { return FiniteWord::parse(s); }

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::vector<std::uint8_t> raw_index(std::uint32_t version, const std::vector<std::uint64_t>& lo,
                                    const std::vector<std::uint64_t>& hi) {
  std::vector<std::uint8_t> out{'P', 'N', 'J', 'I'};
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(version >> (8 * i)));
  put_u64(out, lo.size());
  for (auto v : lo) put_u64(out, v);
  for (auto v : hi) put_u64(out, v);
  return out;
}

}  // namespace

TEST_CASE("queries on the Fibonacci word") {
  auto idx = JumbledIndex::build(morphic_fixpoint(MorphismSpec::fibonacci(), 1024));
  CHECK(idx.query(3, 2));
  CHECK(idx.query(4, 1));
  CHECK_FALSE(idx.query(2, 3));
  CHECK_FALSE(idx.query(5, 0));
  CHECK_FALSE(idx.query(0, 0));
  CHECK_FALSE(idx.query(1000, 25));
  CHECK(idx.word_length() == 1024);
}

TEST_CASE("index arrays") {
  auto idx = JumbledIndex::build(W("0101"));
  CHECK(std::vector<std::uint64_t>(idx.min_ones().begin(), idx.min_ones().end()) ==
        std::vector<std::uint64_t>{0, 1, 1, 2});
  CHECK(std::vector<std::uint64_t>(idx.max_ones().begin(), idx.max_ones().end()) ==
        std::vector<std::uint64_t>{1, 1, 2, 2});
  CHECK(idx.query(1, 1));
  CHECK(idx.query(2, 1));
  CHECK_FALSE(idx.query(0, 2));
  CHECK_THROWS_AS(JumbledIndex::build(W("")), std::invalid_argument);
}

TEST_CASE("queries agree with brute force on every word up to length 11") {
  for (std::size_t len = 1; len <= 11; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      auto w = oracle::from_index(bits, len);
      auto idx = JumbledIndex::build(w);
      for (std::uint64_t z = 0; z <= len; ++z)
        for (std::uint64_t o = 0; o + z <= len + 1; ++o) REQUIRE(idx.query(z, o) == oracle::has_factor(w, z, o));
    }
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = oracle::random_word(rng, 1 + rng() % 300, 0.5);
    auto idx = JumbledIndex::build(w);
    auto bytes = idx.serialize();
    CHECK(bytes.size() == 16 + 16 * w.size());
    CHECK(JumbledIndex::deserialize(bytes) == idx);
    CHECK(JumbledIndex::build(w).serialize() == bytes);
  }
  auto bytes = JumbledIndex::build(W("0101")).serialize();
  CHECK(bytes == raw_index(1, {0, 1, 1, 2}, {1, 1, 2, 2}));
}

TEST_CASE("malformed index files") {
  auto good = raw_index(1, {0, 1, 1, 2}, {1, 1, 2, 2});
  REQUIRE_NOTHROW(JumbledIndex::deserialize(good));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(JumbledIndex::deserialize(bad_magic), FormatError);
  CHECK_THROWS_AS(JumbledIndex::deserialize(raw_index(2, {0, 1, 1, 2}, {1, 1, 2, 2})), FormatError);
  auto truncated = good;
  truncated.pop_back();
  CHECK_THROWS_AS(JumbledIndex::deserialize(truncated), FormatError);
  auto trailing = good;
  trailing.push_back(0);
  CHECK_THROWS_AS(JumbledIndex::deserialize(trailing), FormatError);
  CHECK_THROWS_AS(JumbledIndex::deserialize(std::vector<std::uint8_t>{'P', 'N'}), FormatError);
  CHECK_THROWS_AS(JumbledIndex::deserialize(raw_index(1, {}, {})), FormatError);
  // min above max
  CHECK_THROWS_AS(JumbledIndex::deserialize(raw_index(1, {1, 1}, {0, 1})), FormatError);
  // step of 2
  CHECK_THROWS_AS(JumbledIndex::deserialize(raw_index(1, {0, 0}, {0, 2})), FormatError);
}
