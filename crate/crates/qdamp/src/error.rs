//! Error type shared by all modules.

use thiserror::Error;

use crate::operator::OperatorBasis;

/// Everything that can go wrong when building parameters, states, operators,
/// grids, or sweep specifications.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("driving frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),
    #[error("spontaneous decay rate must be non-negative, got {0}")]
    NegativeDecayRate(f64),
    #[error("temperature must be non-negative, got {0}")]
    NegativeTemperature(f64),
    #[error("Bloch vector of length {0} lies outside the unit ball beyond tolerance")]
    UnphysicalState(f64),
    #[error("operator bases differ: {0:?} vs {1:?}")]
    BasisMismatch(OperatorBasis, OperatorBasis),
    #[error("operation is defined in the {expected:?} basis, got {found:?}")]
    WrongBasis {
        expected: OperatorBasis,
        found: OperatorBasis,
    },
    #[error("cannot normalize the zero operator")]
    ZeroOperator,
    #[error("expected a generator matrix, got a propagator")]
    ExpectedGenerator,
    #[error("expected a propagator matrix, got a generator")]
    ExpectedPropagator,
    #[error("initial sigma_z expectation must lie in [-1, 1], got {0}")]
    InitialZOutOfRange(f64),
    #[error("time grid must not be empty")]
    EmptyGrid,
    #[error("time grid must start at 0, got {0}")]
    GridMustStartAtZero(f64),
    #[error("time grid must be strictly increasing")]
    GridNotIncreasing,
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("invalid sweep specification: {0}")]
    InvalidSweep(String),
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
