#pragma once

#include <stdexcept>
#include <string>

namespace rhnum {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a digit out of range, a bad base, a syntax error.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A pattern syntax error; `position()` is the 0-based offset into the text.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : ValidationError("col " + std::to_string(position + 1) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arithmetic outside a function's domain (n = 0, gcd(b, w) != 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A family generator was called with parameters outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured search budget or factorization cap was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rhnum
