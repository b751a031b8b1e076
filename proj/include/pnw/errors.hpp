#pragma once

#include <stdexcept>
#include <string>

namespace pnw {

// Range errors are reported with std::out_of_range and invalid inputs with
// std::invalid_argument. The types below cover the remaining failure kinds.

/// A parameter combination the library deliberately does not handle, e.g. a
/// non-zero intercept together with an irrational slope.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request to materialize more symbols than the stream cap allows.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed or inconsistent serialized data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No finite bound exists for the requested quantity.
class NoBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace pnw
