#pragma once

#include <stdexcept>
#include <string>

namespace entropic {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: too few components, table too small, wrong rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole of a Gamma, sine or hypergeometric factor.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative evaluation did not settle within its term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Formula branch that is deliberately not implemented.
class UnsupportedBranchError : public Error {
 public:
  using Error::Error;
};

}  // namespace entropic
