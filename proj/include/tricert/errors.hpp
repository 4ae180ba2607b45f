#pragma once

#include <stdexcept>
#include <string>

namespace tricert {

/// Raised when an operation's precondition on its arguments is violated.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a verification pipeline observes a result it cannot explain.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tricert
