#pragma once

#include <stdexcept>
#include <string>

namespace pdgenus {

// Malformed rotation text, graph JSON or other user input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition of an operation was violated (unknown label, kind mismatch,
// invalid share decomposition, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap was exceeded. Caps are never applied by silent
// truncation.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The signed graph handed to the intersection-polynomial machinery has no
// realizing bouquet.
class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdgenus
