//! Bipartite teleportation of one qubit through `ρ^QC(p)`.
//!
//! Qubit 0 carries the input state; qubits 1–3 hold the channel, of which
//! Alice owns 1 and 2 and Bob owns 3. Both circuits are given as a single
//! 16×16 operator with the measurement-conditioned corrections folded in,
//! so Bob's state is `Tr₀₁₂[U (ρ_in ⊗ ρ^QC) U†]`.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use serde::Serialize;

use crate::entanglement::GhzwMixtureParams;
use crate::error::{invalid, Result};
use crate::qcore::{ComplexMatrix, DensityMatrix, PureState, C64};
use crate::quadrature::{sphere_average, QuadratureConfig};
use crate::states;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeKind {
    Ghz,
    W,
}

impl std::str::FromStr for SchemeKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ghz" => Ok(SchemeKind::Ghz),
            "w" => Ok(SchemeKind::W),
            other => invalid(format!("unknown scheme {other:?} (expected ghz or w)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TeleportScheme {
    pub kind: SchemeKind,
    pub unitary: ComplexMatrix,
}

const R: f64 = SQRT_2;

#[rustfmt::skip]
const U_GHZ: [[f64; 16]; 16] = [
    [1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0.],
    [0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1.],
    [0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 0.],
    [0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 0., 0.],
    [0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 1., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 1., 0., 1., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 1., 0., 1., 0., 0., 0., 0., 0., 0., 0.],
    [1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., -1., 0.],
    [0., -1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1.],
    [0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., -1., 0., 0.],
    [0., 0., -1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 0., 0.],
    [0., 0., 0., 0., 1., 0., 0., 0., 0., 0., -1., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., -1., 0., 0., 0., 0., 0., 1., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 1., 0., -1., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., -1., 0., 1., 0., 0., 0., 0., 0., 0., 0.],
];

#[rustfmt::skip]
const U_W: [[f64; 16]; 16] = [
    [0., 0., 1., 0., 1., 0., 0., 0., R, 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 1., 0., 1., 0., 0., 0., R, 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 2., 0., 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 2., 0., 0., 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 2., 0.],
    [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 2.],
    [0., R, 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 1., 0., 0.],
    [R, 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 1., 0., 0., 0.],
    [0., 0., 1., 0., 1., 0., 0., 0., -R, 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., -1., 0., -1., 0., 0., 0., R, 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., R, 0., -R, 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., -R, 0., R, 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., R, 0., -R, 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., -R, 0., R, 0., 0.],
    [0., R, 0., 0., 0., 0., 0., 0., 0., 0., 0., -1., 0., -1., 0., 0.],
    [-R, 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 1., 0., 0., 0.],
];

fn table_matrix(table: &[[f64; 16]; 16], scale: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(16, 16, |i, j| C64::new(table[i][j] * scale, 0.0))
}

/// The circuit operator of the GHZ or W scheme.
pub fn scheme_unitary(kind: SchemeKind) -> TeleportScheme {
    let unitary = match kind {
        SchemeKind::Ghz => table_matrix(&U_GHZ, FRAC_1_SQRT_2),
        SchemeKind::W => table_matrix(&U_W, 0.5),
    };
    TeleportScheme { kind, unitary }
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("mixing weight p = {p} outside [0, 1]"));
    }
    Ok(())
}

/// `ρ^QC = p|ψ_GHZ⟩⟨ψ_GHZ| + (1 − p)|ψ_W⟩⟨ψ_W|`
pub fn channel_state(p: f64) -> Result<DensityMatrix> {
    check_p(p)?;
    DensityMatrix::mixture(&[
        (p, &states::ghz().density()),
        (1.0 - p, &states::w().density()),
    ])
}

/// `cos(θ/2) e^{iφ/2}|0⟩ + sin(θ/2) e^{−iφ/2}|1⟩`
pub fn input_state(theta: f64, phi: f64) -> PureState {
    let (s, c) = (theta / 2.0).sin_cos();
    PureState::new(vec![
        C64::from_polar(c, phi / 2.0),
        C64::from_polar(s, -phi / 2.0),
    ])
    .expect("normalized by construction")
}

#[derive(Debug, Clone)]
pub struct TeleportReport {
    pub p: f64,
    pub theta: f64,
    pub phi: f64,
    pub rho_out: DensityMatrix,
    /// `⟨ψ_in|ρ_out|ψ_in⟩`
    pub fidelity: f64,
}

/// Runs the full 16-dimensional simulation for one input state.
pub fn teleport_output(
    scheme: &TeleportScheme,
    theta: f64,
    phi: f64,
    p: f64,
) -> Result<TeleportReport> {
    if !theta.is_finite() || !phi.is_finite() {
        return invalid("input angles must be finite");
    }
    let psi = input_state(theta, phi);
    let joint = psi.density().tensor(&channel_state(p)?)?;
    let evolved = joint.evolve(&scheme.unitary)?;
    let rho_out = DensityMatrix::new(evolved.partial_trace(&[0, 1, 2])?.into_matrix())?;
    let fidelity = rho_out.expectation(&psi)?;
    Ok(TeleportReport {
        p,
        theta,
        phi,
        rho_out,
        fidelity,
    })
}

/// The scheme at fixed `p` as a linear map on the input qubit:
/// `ρ_in ↦ Σ_{ab} ρ_in[a][b] · M_ab`, with
/// `M_ab = Tr₀₁₂[U (|a⟩⟨b| ⊗ ρ^QC) U†]`.
///
/// Equivalent to [`teleport_output`] but 4 simulations up front instead of
/// one per input, which matters inside the sphere average.
#[derive(Debug, Clone)]
pub struct TeleportChannel {
    blocks: [[ComplexMatrix; 2]; 2],
}

impl TeleportChannel {
    pub fn new(scheme: &TeleportScheme, p: f64) -> Result<Self> {
        let qc = channel_state(p)?;
        let block = |a: usize, b: usize| {
            let mut unit = ComplexMatrix::zeros(2, 2);
            unit[(a, b)] = C64::new(1.0, 0.0);
            let full = unit.kron(qc.matrix()).conjugate_by(&scheme.unitary);
            ComplexMatrix::from_fn(2, 2, |i, j| {
                (0..8).map(|x| full[(2 * x + i, 2 * x + j)]).sum()
            })
        };
        Ok(Self {
            blocks: [[block(0, 0), block(0, 1)], [block(1, 0), block(1, 1)]],
        })
    }

    pub fn output(&self, psi: &PureState) -> ComplexMatrix {
        let a = psi.amplitudes();
        let mut out = ComplexMatrix::zeros(2, 2);
        for (i, row) in self.blocks.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                out = &out + &m.scale(a[i] * a[j].conj());
            }
        }
        out
    }

    pub fn fidelity(&self, theta: f64, phi: f64) -> f64 {
        let psi = input_state(theta, phi);
        let out = self.output(&psi);
        let v = out.matvec(psi.amplitudes());
        psi.amplitudes()
            .iter()
            .zip(&v)
            .map(|(a, b)| a.conj() * b)
            .sum::<C64>()
            .re
    }
}

/// `F_GHZ(θ, φ) = [(3 + 5p) − (1 − p) cos 2θ] / 8`
pub fn fidelity_ghz_closed(theta: f64, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(((3.0 + 5.0 * p) - (1.0 - p) * (2.0 * theta).cos()) / 8.0)
}

/// `F_W = 1 − p/2`, independent of the input.
pub fn fidelity_w_closed(p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(1.0 - p / 2.0)
}

/// Bloch-sphere average of the simulated fidelity.
pub fn avg_fidelity(scheme: &TeleportScheme, p: f64, quad: &QuadratureConfig) -> Result<f64> {
    let channel = TeleportChannel::new(scheme, p)?;
    sphere_average(quad, |theta, phi| Ok(channel.fidelity(theta, phi)))
}

/// `F̄_GHZ = (5 + 7p)/12`, `F̄_W = 1 − p/2`.
pub fn avg_fidelity_closed(kind: SchemeKind, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(match kind {
        SchemeKind::Ghz => (5.0 + 7.0 * p) / 12.0,
        SchemeKind::W => 1.0 - p / 2.0,
    })
}

/// Average fidelities at which the channel entanglement `C_(AB)C` switches
/// off, and the weight where the two schemes perform equally.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalValues {
    /// `F̄_GHZ(p₀)`: below it the GHZ-dominated channel has no `C_(AB)C`.
    pub f_ghz: f64,
    /// `F̄_W(1/3)`: below it the W-dominated channel has no `C_(AB)C`.
    pub f_w: f64,
    /// Root of `F̄_W(p) = F̄_GHZ(p)`, found by bisection.
    pub p_star: f64,
    pub p0: f64,
    pub p1: f64,
}

pub fn critical_values() -> CriticalValues {
    let params = GhzwMixtureParams::standard();
    let fbar = |k, p| avg_fidelity_closed(k, p).expect("p in [0, 1]");
    let gap = |p| fbar(SchemeKind::W, p) - fbar(SchemeKind::Ghz, p);
    let (mut lo, mut hi) = (0.0, 1.0);
    // gap is decreasing: positive at 0, negative at 1
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    CriticalValues {
        f_ghz: fbar(SchemeKind::Ghz, params.p0),
        f_w: fbar(SchemeKind::W, 1.0 / 3.0),
        p_star: 0.5 * (lo + hi),
        p0: params.p0,
        p1: params.p1,
    }
}
