#pragma once

#include <stdexcept>
#include <string>

namespace qpl {

// Base class for all library errors so callers can catch qpl failures as a group.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operator/state dimension mismatch or an inadmissible dimension request.
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

// Bad model/solver/sweep parameter; message names the offending field.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// Steady-state or time-integration failure; carries the last residual seen.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

// The Liouvillian null space appears to be more than one-dimensional.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

// Adaptive step size fell below the configured floor.
class StiffnessError : public Error {
 public:
  using Error::Error;
};

// g2 requested on a state with mean phonon number below the floor.
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

// Poisson fit requested for a distribution with vanishing mean.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

// Threshold extraction asked for with fewer usable points than the stencil needs.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpl
