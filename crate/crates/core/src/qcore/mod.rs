//! Dense complex linear algebra for states on at most four qubits.

pub mod eigen;
pub mod io;
pub mod matrix;
pub mod state;

pub use eigen::{eigh, hermitian_eigenvalues, sqrt_psd, sqrt_psd_matrix, HermitianEigen};
pub use matrix::{pauli, ComplexMatrix, C64};
pub use state::{
    inspect_density, validate_density, validate_density_with, DensityMatrix, DensityReport,
    PureState, MAX_QUBITS,
};

/// Kronecker product.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// Partial trace over `traced` (0-based qubit indices, qubit 0 most significant).
pub fn partial_trace(rho: &DensityMatrix, traced: &[usize]) -> crate::Result<DensityMatrix> {
    rho.partial_trace(traced)
}
