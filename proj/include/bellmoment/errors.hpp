#pragma once

#include <stdexcept>
#include <string>

namespace bellmoment {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold (rank mismatch,
/// parts not summing to the target, empty input where one is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A function was evaluated outside the finite domain it is known on.
class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON schema violations, unparsable text).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellmoment
