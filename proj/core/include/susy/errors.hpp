#pragma once

#include <stdexcept>
#include <string>

namespace susy {

/// Raised when an operation's precondition does not hold for its input
/// (unknown identifiers, non-tree input, odd Ramond count, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the JSON readers on structurally malformed interchange data.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace susy
