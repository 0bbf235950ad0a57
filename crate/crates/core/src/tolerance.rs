//! Numerical tolerances shared across the crate.
//!
//! The free constants are the defaults; [`Tolerances`] bundles them so a
//! caller can override them (for instance when validating matrices read
//! from a lower-precision source).

use serde::{Deserialize, Serialize};

/// Normalization of a pure state, `|Σ|a|² − 1|`.
pub const NORM: f64 = 1e-12;
/// Entrywise `max |ρ − ρ†|` for a density matrix.
pub const HERMITIAN: f64 = 1e-12;
/// Entrywise hermiticity accepted by the eigensolver.
pub const EIGEN_HERMITIAN: f64 = 1e-10;
/// `|tr ρ − 1|`.
pub const TRACE: f64 = 1e-12;
/// Smallest eigenvalue accepted for a density matrix.
pub const PSD: f64 = 1e-10;
/// Eigenvalues in `[-PSD_CLAMP, 0)` are set to zero before square roots.
pub const PSD_CLAMP: f64 = 1e-10;
/// Eigenvalues below `-NOT_PSD` make `sqrt_psd` fail outright.
pub const NOT_PSD: f64 = 1e-8;
/// Jacobi stops once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_OFF: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Eigenvalues above this count towards the numerical rank.
pub const RANK: f64 = 1e-10;
/// Slack allowed on measure values before they are rejected as out of `[0, 1]`.
pub const MEASURE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub norm: f64,
    pub hermitian: f64,
    pub trace: f64,
    pub psd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            norm: NORM,
            hermitian: HERMITIAN,
            trace: TRACE,
            psd: PSD,
        }
    }
}
