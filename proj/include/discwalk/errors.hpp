#pragma once

#include <stdexcept>
#include <string>

namespace discwalk {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- model / coordinate errors -------------------------------------------

/// |D31| too small: disc velocity cannot be recovered from sigma_N.
struct SingularMomentumMap : Error {
  using Error::Error;
};

// --- impact errors ---------------------------------------------------------

/// Contact-constraint block rank deficient (legs exactly superposed).
struct SingularImpact : Error {
  using Error::Error;
};

/// apply_impact called on a state that is not on the guard surface.
struct NotOnGuard : Error {
  using Error::Error;
};

/// Post-impact state still moving into the ground.
struct PenetrationImpact : Error {
  using Error::Error;
};

// --- gait design errors -----------------------------------------------------

/// Query outside the reference-trajectory domain (plus margin).
struct OutOfRange : Error {
  using Error::Error;
};

/// Endpoint slope equations have no admissible solution.
struct InfeasibleBoundary : Error {
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
  using Error::Error;
};

/// The momentum-periodicity residual has no root over the search bracket.
struct NoPeriodicGait : Error {
  using Error::Error;
};

// --- controller errors -------------------------------------------------------

/// Decoupling matrix not invertible; exact linearization lost.
struct SingularDecoupling : Error {
  using Error::Error;
};

// --- simulation errors --------------------------------------------------------

/// q_N stopped advancing; the orientation-parameterized design is invalid there.
struct SpeedReversal : Error {
  using Error::Error;
};

struct IntegratorFailure : Error {
  using Error::Error;
};

/// Absolute orientation left [-pi/2, pi/2].
struct FellOver : Error {
  using Error::Error;
};

/// A single step exceeded the configured maximum duration.
struct StallTimeout : Error {
  using Error::Error;
};

/// Poincare map: no second impact found.
struct NoReturn : Error {
  using Error::Error;
};

// --- analysis errors -----------------------------------------------------------

/// alpha_1 == alpha_2: the closed-form fundamental matrix degenerates.
struct DegenerateGains : Error {
  using Error::Error;
};

// --- config errors ----------------------------------------------------------------

struct OutOfBounds : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace discwalk
