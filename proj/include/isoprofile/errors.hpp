#pragma once

#include <stdexcept>
#include <string>

namespace isoprofile {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator or loader would exceed the configured vertex cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list or config text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (empty set, non-edge, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown command, generator, or malformed option value.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Randomized generator ran out of resampling attempts.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// An exact engine would exceed its state or enumeration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failed to reach its tolerance.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A conditioned law has zero mass.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace isoprofile
