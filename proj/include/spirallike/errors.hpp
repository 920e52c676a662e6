#pragma once

#include <stdexcept>
#include <string>

namespace spirallike {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (z off the disk,
/// lambda out of range, w = 0 for the lambda-argument, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Magnitude too large to represent (e.g. max modulus overflow).
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed or inconsistent input data (measure files, CLI values).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameters violating a constraint of a closed-form family.
class ParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A numerical procedure could not reach its tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Path continuation needs a finer sampling than it was given.
class RefinementError : public Error {
 public:
  RefinementError(const std::string& what, double location)
      : Error(what), location_(location) {}
  /// Parameter (angle or index) at which continuation failed.
  double location() const noexcept { return location_; }

 private:
  double location_;
};

/// Numerical results contradict an invariant they must satisfy.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace spirallike
