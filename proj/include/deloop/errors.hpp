#pragma once

#include <stdexcept>
#include <string>

namespace deloop {

/// Malformed or non-canonical input text (files, scalar strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's contract (dimension or algebra mismatch).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input lies outside the supported class (non-split quotients, unsupported shapes).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deloop
