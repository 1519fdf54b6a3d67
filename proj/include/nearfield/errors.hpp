#pragma once

#include <stdexcept>
#include <string>

namespace nearfield {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (omega = 0, cot poles, k_z = q ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Evaluation on the light cone |t| = r or k = |omega|.
class ConeSingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what, double estimate = 0.0, double error = 0.0)
      : Error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

// Bad user input (CLI parameters, malformed grids).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace nearfield
