#pragma once

#include <stdexcept>
#include <string>

namespace dialg {

/// Raised when a caller violates an operation's preconditions (shape, field
/// or algebra mismatch, unverified input, out-of-range index).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input is well-formed but rejected on mathematical grounds.
/// Subclasses carry the witness that caused the rejection.
class Rejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dialg
