#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Every library error derives from qtorus::Error so callers can catch the
// family at once; the CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built for different values of N.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// A count, grid size or similar argument outside its allowed range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Mathematical domain violation (e.g. Im tau <= 0 for a theta series).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated series could not reach its tolerance within the term budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_bound)
      : Error(what), achieved_bound_(achieved_bound) {}
  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  double achieved_bound_;
};

/// Input failed a numerical precondition (e.g. a non-unitary propagator).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double measured)
      : Error(what), measured_(measured) {}
  double measured() const noexcept { return measured_; }

 private:
  double measured_;
};

/// Matrix dimensions disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtorus
