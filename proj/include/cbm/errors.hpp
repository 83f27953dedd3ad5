#pragma once

#include <stdexcept>
#include <string>

namespace cbm {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (non-finite values,
// shape mismatch, indefinite matrix where PSD is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical parameters that cannot produce a meaningful answer
// (overlapping exclusion windows, grid too coarse for the exclusion, ...).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly on a singular locus.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Problem size beyond what the desk-scale algorithms accept.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace cbm
