#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracon {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. Gamma at a pole).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Two R^alpha values with different alpha tags were combined.
class TagMismatch : public Error {
public:
  TagMismatch(double lhs, double rhs);
};

class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& message);

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t offset_;
  std::string detail_;
};

/// Expression evaluation produced a non-finite value, divided by zero, etc.
class EvalError : public Error {
public:
  using Error::Error;
};

/// Exact backend requested for an expression that has no alpha-monomial normal form.
class NotPolynomialError : public Error {
public:
  using Error::Error;
};

class IntegrationError : public Error {
public:
  using Error::Error;
};

/// Finite-difference step vanishes relative to the evaluation point.
class StepUnderflow : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold (asymmetric weight, empty grid, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace fracon
