//! Entanglement of two- and three-qubit states and bipartite teleportation
//! through mixtures of GHZ and W states.
//!
//! * [`qcore`]: dense complex matrices, states, partial traces, a Jacobi
//!   eigensolver.
//! * [`entanglement`]: concurrence (pure and Wootters), entanglement of
//!   formation, Groverian measure, three-tangle, and the closed-form
//!   three-tangle of GHZ/W mixtures.
//! * [`convexroof`]: a numerical convex-roof minimizer used as an
//!   independent check on the closed forms.
//! * [`teleport`]: the 4-qubit GHZ- and W-scheme teleportation circuits and
//!   their fidelities.
//! * [`noisychan`]: the W state decohered by an `L_x` channel.
//! * [`quadrature`]: Gauss–Legendre averages over the Bloch sphere.
//! * [`validate`]: named invariant suites with a serializable report.

pub mod convexroof;
pub mod entanglement;
pub mod error;
pub mod noisychan;
pub mod qcore;
pub mod quadrature;
pub mod random;
pub mod states;
pub mod teleport;
pub mod tolerance;
pub mod validate;

pub use error::{Error, Invariant, Result};
pub use qcore::{ComplexMatrix, DensityMatrix, PureState, C64};
