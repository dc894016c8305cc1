#pragma once

#include <stdexcept>

namespace esp {

/// A raw partition contained a zero or negative entry.
class NonPositivePart : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed canonical text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An in-memory structure would exceed its configured byte budget.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace esp
