use std::f64::consts::PI;

use crate::entanglement::GhzwMixtureParams;
use crate::error::{invalid, Result};
use crate::qcore::{eigh, ComplexMatrix, DensityMatrix, PureState, C64};
use crate::tolerance;

const WEIGHT_FLOOR: f64 = 1e-12;

/// One pure-state decomposition of a mixed state.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    members: Vec<(f64, PureState)>,
}

impl Ensemble {
    pub fn new(members: Vec<(f64, PureState)>) -> Result<Self> {
        if members.is_empty() {
            return invalid("empty ensemble");
        }
        let dim = members[0].1.dim();
        if members
            .iter()
            .any(|(w, s)| !(*w > 0.0 && *w <= 1.0 + 1e-10) || s.dim() != dim)
        {
            return invalid("ensemble weights must lie in (0, 1] and states share a dimension");
        }
        let total: f64 = members.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > 1e-10 {
            return invalid(format!("ensemble weights sum to {total}"));
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[(f64, PureState)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `Σ wⱼ |ψⱼ⟩⟨ψⱼ|`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.members[0].1.dim();
        self.members
            .iter()
            .fold(ComplexMatrix::zeros(d, d), |acc, (w, s)| {
                &acc + &ComplexMatrix::outer(s.amplitudes()).scale_real(*w)
            })
    }

    /// `Σ wⱼ E(ψⱼ)`
    pub fn average(&self, measure: impl Fn(&[C64]) -> f64) -> f64 {
        self.members
            .iter()
            .map(|(w, s)| w * measure(s.amplitudes()))
            .sum()
    }
}

/// Support of a density matrix: `√λₖ |eₖ⟩` for the eigenvalues above the
/// rank threshold.
#[derive(Debug, Clone)]
pub struct Spectral {
    pub dim: usize,
    /// Scaled eigenvectors `√λₖ |eₖ⟩`, one per nonzero eigenvalue.
    pub scaled: Vec<Vec<C64>>,
}

impl Spectral {
    pub fn of(rho: &DensityMatrix) -> Result<Self> {
        let e = eigh(rho.matrix())?;
        let scaled = e
            .values
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > tolerance::RANK)
            .map(|(k, &l)| e.vector(k).into_iter().map(|z| z * l.sqrt()).collect())
            .collect();
        Ok(Self {
            dim: rho.dim(),
            scaled,
        })
    }

    pub fn rank(&self) -> usize {
        self.scaled.len()
    }

    /// Writes the unnormalized member `Σₖ rowₖ √λₖ |eₖ⟩` into `out`.
    pub(crate) fn member_into(&self, row: &[C64], out: &mut [C64]) {
        out.fill(C64::new(0.0, 0.0));
        for (coef, vec) in row.iter().zip(&self.scaled) {
            for (o, v) in out.iter_mut().zip(vec) {
                *o += coef * v;
            }
        }
    }
}

/// Decomposition of `rho` induced by an `m × r` mixing matrix with
/// orthonormal columns, `r` being the numerical rank of `rho`.
pub fn ensemble_from_mixing(rho: &DensityMatrix, mixing: &ComplexMatrix) -> Result<Ensemble> {
    let spec = Spectral::of(rho)?;
    let r = spec.rank();
    if mixing.cols() != r {
        return invalid(format!(
            "mixing matrix has {} columns but the state has rank {r}",
            mixing.cols()
        ));
    }
    let gram = mixing.adjoint().matmul(mixing);
    let err = gram.max_abs_diff(&ComplexMatrix::identity(r));
    if err > 1e-10 {
        return invalid(format!(
            "mixing columns are not orthonormal (error {err:e})"
        ));
    }
    let mut members = Vec::with_capacity(mixing.rows());
    let mut buf = vec![C64::new(0.0, 0.0); spec.dim];
    for j in 0..mixing.rows() {
        spec.member_into(mixing.row(j), &mut buf);
        let w: f64 = buf.iter().map(|z| z.norm_sqr()).sum();
        if w < WEIGHT_FLOOR {
            continue;
        }
        members.push((w, PureState::normalized(buf.clone())?));
    }
    // Renormalize away the weight of dropped members.
    let total: f64 = members.iter().map(|(w, _)| w).sum();
    for (w, _) in &mut members {
        *w /= total;
    }
    Ensemble::new(members)
}

/// Zero-tangle decomposition of `ρ(p)` for `p ≤ p₀`: three copies of
/// `|p₀, 2πn/3⟩` with weight `p/3p₀` each, plus `|W⟩` with weight `1 − p/p₀`.
pub fn optimal_ghzw_ensemble(p: f64, params: &GhzwMixtureParams) -> Result<Ensemble> {
    if !(0.0..=params.p0).contains(&p) {
        return invalid(format!("p = {p} outside [0, p0 = {}]", params.p0));
    }
    let mut members = Vec::with_capacity(4);
    let w_each = p / (3.0 * params.p0);
    if w_each > 0.0 {
        for n in 0..3 {
            let phi = 2.0 * PI * n as f64 / 3.0;
            members.push((w_each, params.superposition(params.p0, phi)?));
        }
    }
    let w_rest = 1.0 - p / params.p0;
    if w_rest > WEIGHT_FLOOR {
        members.push((w_rest, params.w_state()));
    }
    Ensemble::new(members)
}
