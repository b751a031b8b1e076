#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

/// Largest prefix any stream will materialize.
inline constexpr std::size_t kMaxMaterialization = std::size_t{1} << 26;

/// A lazily generated infinite binary word. Symbols are produced on demand
/// and cached, so prefix(m) is always a prefix of prefix(n) for m <= n.
///
/// Streams are single-owner: they may be moved across threads but must not be
/// used from two threads at once.
class WordStream {
 public:
  WordStream() = default;
  WordStream(const WordStream&) = delete;
  WordStream& operator=(const WordStream&) = delete;
  virtual ~WordStream() = default;

  /// Throws ResourceError if n exceeds kMaxMaterialization.
  FiniteWord prefix(std::size_t n);
  std::size_t produced() const { return buffer_.size(); }

 protected:
  /// Appends symbols to `out` until out.size() >= n.
  virtual void extend(std::vector<Symbol>& out, std::size_t n) = 0;

 private:
  std::vector<Symbol> buffer_;
};

using StreamPtr = std::unique_ptr<WordStream>;

}  // namespace pnw
