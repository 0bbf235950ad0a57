//! Three-tangle of GHZ/W mixtures and the entanglement of the teleportation
//! channel `ρ^QC(p) = p|GHZ⟩⟨GHZ| + (1 − p)|W⟩⟨W|`.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use serde::Serialize;

use super::measure::{MeasureKind, MeasureValue};
use crate::error::{invalid, Result};
use crate::qcore::{DensityMatrix, PureState, C64};

const NORM_TOL: f64 = 1e-12;

/// Coefficients of the generalized states `a|000⟩ + b|111⟩` and
/// `c|001⟩ + d|010⟩ + f|100⟩`, plus the quantities that fix the
/// three-tangle of their mixtures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GhzwMixtureParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub f: f64,
    /// `4cdf / a²b`
    pub s: f64,
    /// Largest weight with vanishing three-tangle, `s^{2/3}/(1 + s^{2/3})`.
    pub p0: f64,
    /// Start of the convexified (linear) branch.
    pub p1: f64,
    /// `4a²b²`
    pub tau3_ghz: f64,
    /// `p₁² − s√(p₁(1 − p₁)³)`
    pub t1: f64,
}

pub fn ghzw_params(a: f64, b: f64, c: f64, d: f64, f: f64) -> Result<GhzwMixtureParams> {
    if [a, b, c, d, f].iter().any(|x| !x.is_finite()) {
        return invalid("non-finite mixture coefficient");
    }
    if (a * a + b * b - 1.0).abs() > NORM_TOL {
        return invalid(format!("a² + b² = {} is not 1", a * a + b * b));
    }
    if (c * c + d * d + f * f - 1.0).abs() > NORM_TOL {
        return invalid(format!("c² + d² + f² = {} is not 1", c * c + d * d + f * f));
    }
    let denom = a * a * b;
    if denom == 0.0 {
        return invalid("a²b = 0 leaves s undefined");
    }
    let s = 4.0 * c * d * f / denom;
    if s.is_nan() || s <= 0.0 {
        return invalid(format!("s = {s} must be positive"));
    }
    let s23 = s.powf(2.0 / 3.0);
    let p0 = s23 / (1.0 + s23);
    let p1 = p0.max(0.5 + 0.5 / (1.0 + s * s).sqrt());
    let t1 = p1 * p1 - s * (p1 * (1.0 - p1).powi(3)).sqrt();
    Ok(GhzwMixtureParams {
        a,
        b,
        c,
        d,
        f,
        s,
        p0,
        p1,
        tau3_ghz: 4.0 * (a * a * b * b).abs(),
        t1,
    })
}

fn check_weight(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("mixing weight p = {p} outside [0, 1]"));
    }
    Ok(())
}

impl GhzwMixtureParams {
    /// The GHZ and W states of the teleportation channel:
    /// `a = b = c = 1/√2`, `d = f = 1/2`, giving `s = 2`.
    pub fn standard() -> Self {
        ghzw_params(FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.5, 0.5)
            .expect("standard coefficients are valid")
    }

    pub fn ghz_state(&self) -> PureState {
        let mut amp = [0.0; 8];
        amp[0b000] = self.a;
        amp[0b111] = self.b;
        PureState::from_real(&amp).expect("normalization checked")
    }

    pub fn w_state(&self) -> PureState {
        let mut amp = [0.0; 8];
        amp[0b001] = self.c;
        amp[0b010] = self.d;
        amp[0b100] = self.f;
        PureState::from_real(&amp).expect("normalization checked")
    }

    /// `√p|GHZ⟩ − √(1 − p) e^{iφ}|W⟩`
    pub fn superposition(&self, p: f64, phi: f64) -> Result<PureState> {
        check_weight(p)?;
        let g = C64::new(p.sqrt(), 0.0);
        let w = C64::from_polar((1.0 - p).sqrt(), phi);
        let amps = self
            .ghz_state()
            .amplitudes()
            .iter()
            .zip(self.w_state().amplitudes())
            .map(|(x, y)| g * x - w * y)
            .collect();
        PureState::new(amps)
    }

    /// `ρ(p) = p|GHZ⟩⟨GHZ| + (1 − p)|W⟩⟨W|`
    pub fn density(&self, p: f64) -> Result<DensityMatrix> {
        check_weight(p)?;
        DensityMatrix::mixture(&[
            (p, &self.ghz_state().density()),
            (1.0 - p, &self.w_state().density()),
        ])
    }

    fn middle_branch(&self, p: f64) -> f64 {
        self.tau3_ghz * (p * p - (p * (1.0 - p).powi(3)).sqrt() * self.s).abs()
    }

    /// Piecewise three-tangle of `ρ(p)`.
    pub fn three_tangle(&self, p: f64) -> Result<MeasureValue> {
        check_weight(p)?;
        let tau = if p <= self.p0 {
            0.0
        } else if p <= self.p1 {
            self.middle_branch(p)
        } else {
            let p1 = self.p1;
            self.tau3_ghz * ((p - p1) / (1.0 - p1) + (1.0 - p) / (1.0 - p1) * self.t1)
        };
        MeasureValue::new(MeasureKind::ThreeTangle, tau)
    }
}

pub fn three_tangle_ghzw(p: f64, params: &GhzwMixtureParams) -> Result<MeasureValue> {
    params.three_tangle(p)
}

/// Pairwise concurrences of the reductions of `ρ^QC(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedConcurrences {
    pub ab: MeasureValue,
    pub ac: MeasureValue,
    pub bc: MeasureValue,
}

pub fn reduced_concurrences_qc(p: f64) -> Result<ReducedConcurrences> {
    check_weight(p)?;
    let ab = ((1.0 - p - 2.0 * p.sqrt()) / 2.0).max(0.0);
    let ac = (((1.0 - p) - (p * (1.0 + p)).sqrt()) / SQRT_2).max(0.0);
    let m = |v| MeasureValue::new(MeasureKind::Concurrence, v);
    Ok(ReducedConcurrences {
        ab: m(ab)?,
        ac: m(ac)?,
        bc: m(ac)?,
    })
}

/// `C_(AB)C = √(C²_AC + C²_BC + τ₃(ρ^QC))`
pub fn c_abc_mixture(p: f64) -> Result<MeasureValue> {
    let red = reduced_concurrences_qc(p)?;
    let tau = GhzwMixtureParams::standard().three_tangle(p)?.value;
    let v = (red.ac.value.powi(2) + red.bc.value.powi(2) + tau).sqrt();
    MeasureValue::new(MeasureKind::CutConcurrence, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states;

    #[test]
    fn standard_constants() {
        let s = GhzwMixtureParams::standard();
        assert!((s.s - 2.0).abs() < 1e-15);
        assert!((s.tau3_ghz - 1.0).abs() < 1e-15);
        let c = 2f64.powf(2.0 / 3.0);
        assert!((s.p0 - c / (1.0 + c)).abs() < 1e-15);
        assert!((s.p0 - 0.614).abs() < 1e-3);
        let sqrt5 = 5f64.sqrt();
        assert!((s.p1 - (1.0 + sqrt5) / (2.0 * sqrt5)).abs() < 1e-15);
        assert!((s.t1 - 0.276).abs() < 1e-3);
    }

    #[test]
    fn standard_states_match_named_states() {
        let s = GhzwMixtureParams::standard();
        assert_eq!(s.ghz_state(), states::ghz());
        assert!((s.w_state().inner(&states::w()).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn s_equal_one_gives_half() {
        // solve c²√(1 − 2c²) = a²b/4 with a = b = 1/√2 by bisection
        let target = 0.5 * FRAC_1_SQRT_2 / 4.0;
        let g = |c: f64| c * c * (1.0 - 2.0 * c * c).sqrt() - target;
        let (mut lo, mut hi) = (0.2, 0.5);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                hi = mid
            } else {
                lo = mid
            }
        }
        let c = 0.5 * (lo + hi);
        let f = (1.0 - 2.0 * c * c).sqrt();
        let p = ghzw_params(FRAC_1_SQRT_2, FRAC_1_SQRT_2, c, c, f).unwrap();
        assert!((p.s - 1.0).abs() < 1e-12);
        assert!((p.p0 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn param_errors() {
        assert!(ghzw_params(1.0, 0.0, FRAC_1_SQRT_2, 0.5, 0.5).is_err());
        assert!(ghzw_params(0.5, 0.5, FRAC_1_SQRT_2, 0.5, 0.5).is_err());
        assert!(ghzw_params(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn piecewise_tangle_examples() {
        let s = GhzwMixtureParams::standard();
        assert_eq!(s.three_tangle(0.5).unwrap().value, 0.0);
        assert!((s.three_tangle(1.0).unwrap().value - 1.0).abs() < 1e-14);
        let expected = (0.49 - 2.0 * (0.7f64 * 0.027).sqrt()).abs();
        assert!((s.three_tangle(0.7).unwrap().value - expected).abs() < 1e-14);
        assert!((expected - 0.215).abs() < 1e-3);
        assert!(s.three_tangle(-0.1).is_err());
        assert!(s.three_tangle(1.1).is_err());
    }

    #[test]
    fn piecewise_tangle_is_continuous() {
        let s = GhzwMixtureParams::standard();
        assert!(s.middle_branch(s.p0) < 1e-12);
        let conv_at_p1 = s.tau3_ghz * s.t1;
        assert!((s.middle_branch(s.p1) - conv_at_p1).abs() < 1e-12);
    }

    #[test]
    fn reduced_concurrence_examples() {
        let r = reduced_concurrences_qc(0.0).unwrap();
        assert!((r.ab.value - 0.5).abs() < 1e-15);
        assert!((r.ac.value - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(r.ac, r.bc);
        let r = reduced_concurrences_qc(0.5).unwrap();
        assert_eq!((r.ab.value, r.ac.value, r.bc.value), (0.0, 0.0, 0.0));
        let r = reduced_concurrences_qc(0.2).unwrap();
        assert_eq!(r.ab.value, 0.0);
        assert!((r.ac.value - (0.8 - 0.24f64.sqrt()) / SQRT_2).abs() < 1e-15);
        assert!((r.ac.value - 0.2193).abs() < 1e-4);
    }

    #[test]
    fn c_abc_examples() {
        assert!((c_abc_mixture(0.0).unwrap().value - 1.0).abs() < 1e-14);
        assert_eq!(c_abc_mixture(0.5).unwrap().value, 0.0);
        assert!((c_abc_mixture(1.0).unwrap().value - 1.0).abs() < 1e-14);
    }
}
