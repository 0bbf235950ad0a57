use serde::Serialize;

use super::measure::{MeasureKind, MeasureValue};
use super::two_qubit::concurrence_wootters;
use crate::error::{invalid, Result};
use crate::qcore::{PureState, C64};

/// Bipartition of three qubits A, B, C into a pair and a single qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cut {
    /// AB | C
    AbC,
    /// AC | B
    AcB,
    /// BC | A
    BcA,
}

impl Cut {
    pub const ALL: [Cut; 3] = [Cut::AbC, Cut::AcB, Cut::BcA];

    /// Index of the lone qubit (A = 0).
    pub fn single(self) -> usize {
        match self {
            Cut::AbC => 2,
            Cut::AcB => 1,
            Cut::BcA => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Cut::AbC => "AB|C",
            Cut::AcB => "AC|B",
            Cut::BcA => "BC|A",
        }
    }
}

/// `4|d₁ − 2d₂ + 4d₃|` on raw three-qubit amplitudes (Cayley hyperdeterminant).
pub fn three_tangle_amplitudes(a: &[C64]) -> f64 {
    let d1 = a[0] * a[0] * a[7] * a[7]
        + a[1] * a[1] * a[6] * a[6]
        + a[2] * a[2] * a[5] * a[5]
        + a[4] * a[4] * a[3] * a[3];
    let d2 = a[0] * a[7] * a[3] * a[4]
        + a[0] * a[7] * a[5] * a[2]
        + a[0] * a[7] * a[6] * a[1]
        + a[3] * a[4] * a[5] * a[2]
        + a[3] * a[4] * a[6] * a[1]
        + a[5] * a[2] * a[6] * a[1];
    let d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4];
    4.0 * (d1 - 2.0 * d2 + 4.0 * d3).norm()
}

fn require_three(psi: &PureState) -> Result<()> {
    if psi.num_qubits() != 3 {
        return invalid(format!(
            "expected a 3-qubit state, got {} qubits",
            psi.num_qubits()
        ));
    }
    Ok(())
}

pub fn three_tangle_pure(psi: &PureState) -> Result<MeasureValue> {
    require_three(psi)?;
    MeasureValue::new(
        MeasureKind::ThreeTangle,
        three_tangle_amplitudes(psi.amplitudes()),
    )
}

/// `2√det ρ_Z` where `ρ_Z` is the reduced state of the lone qubit of `cut`.
pub fn cut_concurrence_amplitudes(a: &[C64], cut: Cut) -> f64 {
    let bit = 1usize << (2 - cut.single());
    let (mut r00, mut r11, mut r01) = (0.0, 0.0, C64::new(0.0, 0.0));
    for x in (0..8).filter(|x| x & bit == 0) {
        let (lo, hi) = (a[x], a[x | bit]);
        r00 += lo.norm_sqr();
        r11 += hi.norm_sqr();
        r01 += lo * hi.conj();
    }
    2.0 * (r00 * r11 - r01.norm_sqr()).max(0.0).sqrt()
}

pub fn cut_concurrence_pure(psi: &PureState, cut: Cut) -> Result<MeasureValue> {
    require_three(psi)?;
    MeasureValue::new(
        MeasureKind::CutConcurrence,
        cut_concurrence_amplitudes(psi.amplitudes(), cut),
    )
}

/// `C²_(AB)C − C²_AC − C²_BC`, with the pair concurrences taken from the
/// Wootters formula on the two-qubit reductions.
pub fn monogamy_residual(psi: &PureState) -> Result<f64> {
    require_three(psi)?;
    let rho = psi.density();
    let c_ac = concurrence_wootters(&rho.reduce_to(&[0, 2])?)?.value;
    let c_bc = concurrence_wootters(&rho.reduce_to(&[1, 2])?)?.value;
    let c_ab_c = cut_concurrence_amplitudes(psi.amplitudes(), Cut::AbC);
    Ok(c_ab_c * c_ab_c - c_ac * c_ac - c_bc * c_bc)
}
