#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermitia {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was asked to divide by something that is exactly zero
/// (or a zero divisor of the coefficient ring).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold
/// (wrong degree, wrong dimension, non-integrable structure, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation could not be carried out (missing value, bad valuation).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermitia
