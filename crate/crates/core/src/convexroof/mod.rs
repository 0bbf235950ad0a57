//! Numerical convex roof: minimizes `Σ wⱼ E(ψⱼ)` over pure-state
//! decompositions `ρ = Σ wⱼ |ψⱼ⟩⟨ψⱼ|`.
//!
//! Every decomposition of a rank-`r` state into `m` members is
//! `|ψ̃ⱼ⟩ = Σₖ Vⱼₖ √λₖ |eₖ⟩` for an `m × r` matrix `V` with orthonormal columns,
//! where `λₖ, |eₖ⟩` is the spectral decomposition of `ρ`. The search runs over
//! `V` parameterized by Givens rotations, so every trial point is a feasible
//! decomposition and the result is always an upper bound on the roof.

mod ensemble;
mod search;

pub use ensemble::{ensemble_from_mixing, optimal_ghzw_ensemble, Ensemble, Spectral};
pub use search::{minimize_roof, GivensIsometry, RoofConfig, RoofResult};

/// Pure-state measures on raw normalized amplitudes, ready to pass to
/// [`minimize_roof`].
pub mod measures {
    use crate::entanglement::{self, Cut};
    use crate::qcore::C64;

    pub fn concurrence(a: &[C64]) -> f64 {
        entanglement::concurrence_amplitudes(a)
    }

    pub fn three_tangle(a: &[C64]) -> f64 {
        entanglement::three_tangle_amplitudes(a)
    }

    pub fn cut_concurrence(cut: Cut) -> impl Fn(&[C64]) -> f64 + Copy {
        move |a| entanglement::cut_concurrence_amplitudes(a, cut)
    }
}
