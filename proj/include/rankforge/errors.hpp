#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankforge {

// Base of every error raised by the library. Callers that only need a
// diagnostic can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands belong to different prime fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for its input
// (h outside span(L), a subspace that is not invariant, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class FieldTooSmall : public Error {
 public:
  FieldTooSmall(std::string what, std::size_t required_bound)
      : Error(std::move(what)), required_bound_(required_bound) {}

  // Smallest field size the failed operation would have accepted is
  // required_bound() + 1.
  std::size_t required_bound() const noexcept { return required_bound_; }

 private:
  std::size_t required_bound_;
};

// The equivariant projection system of the cyclic increment step has no
// solution, which happens only for modules that are not semisimple.
class NoComplement : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed: a progress step stalled or a
// produced certificate did not verify.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class RankDidNotIncrease : public InvariantBreach {
 public:
  using InvariantBreach::InvariantBreach;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rankforge
