#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (bad ids, disconnected graph, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Text that is not valid JSON or does not follow the expected schema.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Input exceeds a hard size gate (e.g. the exact treewidth oracle).
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; always indicates a bug or a broken certificate.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace blowup
