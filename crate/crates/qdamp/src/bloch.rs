//! Bloch-vector states and the l1 coherence monotone.
//!
//! A qubit state is the expectation triple (⟨σx⟩, ⟨σy⟩, ⟨σz⟩); physical
//! states fill the closed unit ball. In the σz eigenbasis the off-diagonal
//! density-matrix entries are (x ∓ iy)/2, so the l1 measure of coherence —
//! the summed moduli of the off-diagonal entries — is √(x² + y²).

use crate::error::{Error, Result};
use crate::scalar::{lit, to64, Scalar};

/// Expectation values (⟨σx⟩, ⟨σy⟩, ⟨σz⟩) of a qubit state.
///
/// Construction enforces the unit-ball constraint: vectors that stick out by
/// at most a rounding-sized tolerance are rescaled onto the sphere, anything
/// further out is rejected as unphysical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState<T> {
    x: T,
    y: T,
    z: T,
}

impl<T: Scalar> BlochState<T> {
    /// Accepted overshoot of the unit norm before a state is rejected.
    /// 1e-9 absorbs accumulated round-off from long evolutions in f64; the
    /// epsilon term keeps the margin meaningful for narrower scalars.
    fn ball_tolerance() -> T {
        lit::<T>(1e-9).max(T::epsilon() * lit::<T>(8.0))
    }

    /// Validate a Bloch vector, rescaling tolerable overshoots onto the
    /// unit sphere.
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        let norm_sq = x * x + y * y + z * z;
        if norm_sq <= T::one() {
            return Ok(Self { x, y, z });
        }
        let norm = norm_sq.sqrt();
        if norm <= T::one() + Self::ball_tolerance() {
            Ok(Self {
                x: x / norm,
                y: y / norm,
                z: z / norm,
            })
        } else {
            Err(Error::UnphysicalState(to64(norm)))
        }
    }

    /// Internal constructor for evolution outputs: contraction plus rounding
    /// can only overshoot the ball by ulps, which are rescaled away.
    pub(crate) fn clamped(x: T, y: T, z: T) -> Self {
        let norm_sq = x * x + y * y + z * z;
        if norm_sq <= T::one() {
            Self { x, y, z }
        } else {
            let norm = norm_sq.sqrt();
            Self {
                x: x / norm,
                y: y / norm,
                z: z / norm,
            }
        }
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn z(&self) -> T {
        self.z
    }

    /// Euclidean length of the Bloch vector (1 for pure states).
    pub fn norm(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// l1 coherence √(x² + y²): the summed moduli of the off-diagonal
    /// density-matrix entries in the σz eigenbasis.
    pub fn coherence_l1(&self) -> T {
        self.x.hypot(self.y)
    }
}

/// The +1 eigenstate |+⟩ of σx — the maximally coherent pure state, with
/// Bloch vector (1, 0, 0) and l1 coherence 1.
pub fn maximally_coherent_state<T: Scalar>() -> BlochState<T> {
    BlochState {
        x: T::one(),
        y: T::zero(),
        z: T::zero(),
    }
}
