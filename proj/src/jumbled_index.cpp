#include "pnw/jumbled_index.hpp"

#include <array>
#include <stdexcept>

#include "pnw/errors.hpp"

namespace pnw {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'P', 'N', 'J', 'I'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 4 + 8;

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[offset + i]) << (8 * i);
  return value;
}

}  // namespace

JumbledIndex JumbledIndex::build(const FiniteWord& w) {
  if (w.empty()) throw std::invalid_argument("cannot index the empty word");
  return JumbledIndex(compute_profile(w));
}

JumbledIndex JumbledIndex::from_profile(PrefixProfile profile) {
  if (profile.length() == 0) throw std::invalid_argument("cannot index the empty word");
  return JumbledIndex(std::move(profile));
}

bool JumbledIndex::query(std::uint64_t zeros, std::uint64_t ones) const {
  const std::uint64_t n = word_length();
  if (zeros > n || ones > n) return false;
  const std::uint64_t len = zeros + ones;
  if (len == 0 || len > n) return false;
  return profile_.min_ones(len) <= ones && ones <= profile_.max_ones(len);
}

std::vector<std::uint8_t> JumbledIndex::serialize() const {
  const std::uint64_t n = word_length();
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + 16 * n);
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint64_t>(out, n);
  for (auto v : min_ones()) put_le<std::uint64_t>(out, v);
  for (auto v : max_ones()) put_le<std::uint64_t>(out, v);
  return out;
}

JumbledIndex JumbledIndex::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("index payload truncated in header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw FormatError("bad index magic");
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kVersion) throw FormatError("unsupported index version " + std::to_string(version));
  const auto n = get_le<std::uint64_t>(bytes, 8);
  if (n == 0) throw FormatError("index of an empty word");
  const std::size_t body = bytes.size() - kHeaderSize;
  if (n > body / 16) throw FormatError("index payload truncated");
  if (body != 16 * n) throw FormatError("trailing bytes after index payload");

  std::vector<std::uint64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) lo[i] = get_le<std::uint64_t>(bytes, kHeaderSize + 8 * i);
  for (std::size_t i = 0; i < n; ++i) hi[i] = get_le<std::uint64_t>(bytes, kHeaderSize + 8 * (n + i));
  try {
    return JumbledIndex(PrefixProfile(std::move(hi), std::move(lo)));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("index arrays violate invariants: ") + e.what());
  }
}

}  // namespace pnw
