#pragma once

#include <stdexcept>
#include <string>

namespace gmconn {

// Base class for every error raised by the library. `kind()` is a short
// machine-readable tag used by the CLI's JSON error envelope.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed text or file input.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

// Input violates a documented precondition or invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_input"; }
};

// Division by zero, a vanishing denominator, or an inexact quotient.
class ArithmeticError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "arithmetic"; }
};

// A linear system that should be solvable is not (resonant weights, an
// invalid degeneration path, or a basis-convention fault).
class InconsistentSystem : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "inconsistent_system"; }
};

}  // namespace gmconn
