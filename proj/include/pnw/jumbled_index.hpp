#pragma once

// Indexed binary jumbled pattern matching. For a fixed length the number of
// 1s over all factors forms a contiguous integer interval, so storing its two
// endpoints per length answers "is there a factor with x 0s and y 1s?" in O(1).

#include <cstdint>
#include <span>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

class JumbledIndex {
 public:
  /// Throws std::invalid_argument for the empty word.
  static JumbledIndex build(const FiniteWord& w);
  static JumbledIndex from_profile(PrefixProfile profile);

  std::size_t word_length() const { return profile_.length(); }
  const PrefixProfile& profile() const { return profile_; }
  std::span<const std::uint64_t> min_ones() const { return profile_.min_ones_array(); }
  std::span<const std::uint64_t> max_ones() const { return profile_.max_ones_array(); }

  /// True iff the word has a factor with `zeros` 0s and `ones` 1s. The empty
  /// factor is never reported.
  bool query(std::uint64_t zeros, std::uint64_t ones) const;

  /// Little-endian layout: "PNJI", u32 version = 1, u64 n, n x u64 min_ones,
  /// n x u64 max_ones.
  std::vector<std::uint8_t> serialize() const;
  /// Throws FormatError on bad magic or version, truncation, trailing bytes or
  /// arrays that violate the profile invariants.
  static JumbledIndex deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const JumbledIndex&, const JumbledIndex&) = default;

 private:
  explicit JumbledIndex(PrefixProfile p) : profile_(std::move(p)) {}
  PrefixProfile profile_;
};

}  // namespace pnw
