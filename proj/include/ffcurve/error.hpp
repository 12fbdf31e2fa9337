#pragma once

#include <stdexcept>
#include <string>

namespace ffc {

// Bad arguments: a non-prime characteristic, an index out of range, a broken precondition.
// The CLI maps these to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration would exceed the configured cap (exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed result contradicts something that must hold (exit code 1).
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ffc
