//! Closed-form entanglement measures.

mod measure;
mod mixture;
mod three_qubit;
mod two_qubit;

pub use measure::{MeasureKind, MeasureValue};
pub use mixture::{
    c_abc_mixture, ghzw_params, reduced_concurrences_qc, three_tangle_ghzw, GhzwMixtureParams,
    ReducedConcurrences,
};
pub use three_qubit::{
    cut_concurrence_amplitudes, cut_concurrence_pure, monogamy_residual, three_tangle_amplitudes,
    three_tangle_pure, Cut,
};
pub use two_qubit::{
    binary_entropy, concurrence_amplitudes, concurrence_pure2, concurrence_wootters,
    eof_from_concurrence, groverian_from_concurrence, wootters_lambdas,
};
