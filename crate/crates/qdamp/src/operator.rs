//! Hermitian qubit operators as real coefficient vectors over tagged bases.
//!
//! Two four-element operator bases are in play:
//!
//! * `Pauli`: (σx, σy, σz, I) — the natural frame for Bloch dynamics;
//! * `Projector`: (Π+, Π−, σy, σz) with Π± = (I ± σx)/2 — the natural frame
//!   for σx measurement statistics.
//!
//! The tag travels with the coefficients, and operations that combine two
//! vectors reject mismatched bases instead of silently mixing frames.

use crate::scalar::{lit, Scalar};

/// Which four-operator basis a coefficient vector refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorBasis {
    /// (σx, σy, σz, I)
    Pauli,
    /// (Π+, Π−, σy, σz), where Π± project onto the ±1 eigenstates of σx
    Projector,
}

/// A Hermitian operator A = Σ_i c_i B_i with real coefficients `c` over the
/// tagged basis `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorVector<T> {
    basis: OperatorBasis,
    coeffs: [T; 4],
}

impl<T: Scalar> OperatorVector<T> {
    pub fn new(basis: OperatorBasis, coeffs: [T; 4]) -> Self {
        Self { basis, coeffs }
    }

    /// σx as a Pauli-basis vector.
    pub fn sigma_x() -> Self {
        Self::new(OperatorBasis::Pauli, [T::one(), T::zero(), T::zero(), T::zero()])
    }

    /// σy as a Pauli-basis vector.
    pub fn sigma_y() -> Self {
        Self::new(OperatorBasis::Pauli, [T::zero(), T::one(), T::zero(), T::zero()])
    }

    /// σz as a Pauli-basis vector.
    pub fn sigma_z() -> Self {
        Self::new(OperatorBasis::Pauli, [T::zero(), T::zero(), T::one(), T::zero()])
    }

    /// The identity as a Pauli-basis vector.
    pub fn identity() -> Self {
        Self::new(OperatorBasis::Pauli, [T::zero(), T::zero(), T::zero(), T::one()])
    }

    pub fn basis(&self) -> OperatorBasis {
        self.basis
    }

    pub fn coeffs(&self) -> [T; 4] {
        self.coeffs
    }

    /// Rescale all coefficients by `s` (same basis).
    pub fn scaled(&self, s: T) -> Self {
        let c = self.coeffs;
        Self::new(self.basis, [c[0] * s, c[1] * s, c[2] * s, c[3] * s])
    }

    /// Squared Hilbert–Schmidt norm Tr(A†A).
    ///
    /// Pauli operators each carry trace weight 2; in the projector basis the
    /// Π± components carry weight 1 (Π± are rank-one projectors) and the
    /// σy, σz components weight 2, with all cross terms vanishing.
    pub fn hs_norm_sq(&self) -> T {
        let [a, b, c, d] = self.coeffs;
        let two = lit::<T>(2.0);
        match self.basis {
            OperatorBasis::Pauli => two * (a * a + b * b + c * c + d * d),
            OperatorBasis::Projector => a * a + b * b + two * (c * c + d * d),
        }
    }
}
