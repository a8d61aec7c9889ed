#pragma once

#include <stdexcept>
#include <string>

namespace kinlb {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, long step) : Error(what), step(step) {}
  long step;
};

class InversionError : public Error {
 public:
  InversionError(const std::string& what, long cell, double residual)
      : Error(what), cell(cell), residual(residual) {}
  long cell;
  double residual;
};

class MaxStepsExceeded : public Error {
 public:
  using Error::Error;
};

class CflViolation : public Error {
 public:
  using Error::Error;
};

class UnknownProblem : public Error {
 public:
  using Error::Error;
};

}  // namespace kinlb
