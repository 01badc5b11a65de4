#pragma once

#include <stdexcept>
#include <string>

namespace baefb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Covariance matrix is not symmetric within tolerance.
struct NonSymmetricError : Error {
  using Error::Error;
};

// squeezing_db called with variance <= 0.
struct NonPositiveVarianceError : Error {
  using Error::Error;
};

// Closed forms that are singular at g = 0.
struct ZeroCouplingError : Error {
  using Error::Error;
};

// An integration left the overflow guard; the drift is unstable.
struct DivergenceError : Error {
  using Error::Error;
};

// A steady-state solve requires a Hurwitz drift (or stable monodromy).
struct NotHurwitzError : Error {
  NotHurwitzError(const std::string& what, double offending)
      : Error(what), offending_eigenvalue(offending) {}
  double offending_eigenvalue;
};

// Periodic iteration exhausted max_periods.
struct NoConvergenceError : Error {
  using Error::Error;
};

// Closed-loop drift of a constant-coefficient control Riccati is unstable.
struct NonStabilizingError : Error {
  using Error::Error;
};

// A state failed the physicality check during integration.
struct UnphysicalError : Error {
  using Error::Error;
};

// Markovian gain requested with a non-invertible feedback matrix.
struct SingularFError : Error {
  using Error::Error;
};

struct SingularXiError : Error {
  using Error::Error;
};

// Operation requires a converged periodic trajectory.
struct NotConvergedError : Error {
  using Error::Error;
};

// Ensemble statistics need at least two trajectories.
struct InsufficientEnsembleError : Error {
  using Error::Error;
};

// Configuration file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// Configuration parsed but violates an invariant; message lists all violations.
struct ValidationError : Error {
  using Error::Error;
};

struct UnknownPresetError : Error {
  using Error::Error;
};

}  // namespace baefb
