#pragma once

#include <stdexcept>
#include <string>

namespace tammann {

// Base of every error raised by the library. The CLI maps ConfigError to exit
// code 2 and NumericalError (and its children) to exit code 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class NumericalError : public Error {
public:
  using Error::Error;
};

// A state that violates rho > 0, p + p_inf > 0 or is not finite.
class InvalidStateError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// The Riemann problem has no solution with a positive star pressure margin.
class VacuumError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// HLLC star-speed denominator vanished.
class DegenerateSpeedsError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class GridError : public Error {
public:
  using Error::Error;
};

// Raised by the time integrators; carries the offending cell and time.
class StepFailure : public NumericalError {
public:
  StepFailure(const std::string& what, double time, long cell_i, long cell_j = -1)
      : NumericalError(what), time_(time), cell_i_(cell_i), cell_j_(cell_j) {}

  double time() const { return time_; }
  long cell_i() const { return cell_i_; }
  long cell_j() const { return cell_j_; }

private:
  double time_;
  long cell_i_;
  long cell_j_;
};

} // namespace tammann
