#include "pnw/stream.hpp"

#include <string>

#include "pnw/errors.hpp"

namespace pnw {

FiniteWord WordStream::prefix(std::size_t n) {
  if (n > kMaxMaterialization) {
    throw ResourceError("refusing to materialize " + std::to_string(n) + " symbols (cap is " +
                        std::to_string(kMaxMaterialization) + ")");
  }
  if (buffer_.size() < n) extend(buffer_, n);
  return FiniteWord(std::vector<Symbol>(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace pnw
