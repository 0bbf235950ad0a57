//! A W state after local decoherence on all three qubits.
//!
//! The matrix entries are fixed combinations of six decay factors; the
//! three-tangle of the result has no known closed form, so only convex-roof
//! upper bounds are reported for it.

use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::convexroof::{measures, minimize_roof, RoofConfig};
use crate::entanglement::{concurrence_wootters, Cut};
use crate::error::{invalid, Result};
use crate::qcore::{inspect_density, ComplexMatrix, DensityMatrix, DensityReport, C64};
use crate::states;
use crate::tolerance::{self, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoiseParams {
    pub kappa_t: f64,
    pub alpha: [f64; 4],
    pub beta_plus: f64,
    pub beta_minus: f64,
}

pub fn noise_params(kappa_t: f64) -> Result<NoiseParams> {
    if !kappa_t.is_finite() || kappa_t < 0.0 {
        return invalid(format!("κt must be finite and non-negative, got {kappa_t}"));
    }
    let e = (-2.0 * kappa_t).exp();
    let (e2, e3) = (e * e, e * e * e);
    Ok(NoiseParams {
        kappa_t,
        alpha: [
            1.0 + e + e2 + e3,
            1.0 + e - e2 - e3,
            1.0 - e - e2 + e3,
            1.0 - e + e2 - e3,
        ],
        beta_plus: 1.0 + e3,
        beta_minus: 1.0 - e3,
    })
}

#[derive(Clone, Copy)]
enum Sym {
    A1,
    A2,
    A3,
    A4,
    Bp,
    Bm,
}

// Upper triangle of 16·ε; (row, col, symbol, multiplier).
#[rustfmt::skip]
const ENTRIES: [(usize, usize, Sym, f64); 20] = [
    (0, 0, Sym::A2, 2.0), (0, 3, Sym::A2, SQRT_2), (0, 5, Sym::A2, SQRT_2), (0, 6, Sym::A2, 1.0),
    (1, 1, Sym::A1, 2.0), (1, 2, Sym::A1, SQRT_2), (1, 4, Sym::A1, SQRT_2), (1, 7, Sym::A3, 1.0),
    (2, 2, Sym::Bp, 2.0), (2, 4, Sym::A1, 1.0),    (2, 7, Sym::A3, SQRT_2),
    (3, 3, Sym::Bm, 2.0), (3, 5, Sym::A4, 1.0),    (3, 6, Sym::A4, SQRT_2),
    (4, 4, Sym::Bp, 2.0), (4, 7, Sym::A3, SQRT_2),
    (5, 5, Sym::Bm, 2.0), (5, 6, Sym::A4, SQRT_2),
    (6, 6, Sym::A4, 2.0),
    (7, 7, Sym::A3, 2.0),
];

fn noisy_matrix(n: &NoiseParams) -> ComplexMatrix {
    let value = |s: Sym| match s {
        Sym::A1 => n.alpha[0],
        Sym::A2 => n.alpha[1],
        Sym::A3 => n.alpha[2],
        Sym::A4 => n.alpha[3],
        Sym::Bp => n.beta_plus,
        Sym::Bm => n.beta_minus,
    };
    let mut m = ComplexMatrix::zeros(8, 8);
    for &(i, j, sym, mult) in &ENTRIES {
        let v = C64::new(value(sym) * mult / 16.0, 0.0);
        m[(i, j)] = v;
        m[(j, i)] = v;
    }
    m
}

/// `ε_x(ρ_W)` at decoherence strength `κt`.
pub fn epsilon_x_w(kappa_t: f64) -> Result<DensityMatrix> {
    DensityMatrix::new(noisy_matrix(&noise_params(kappa_t)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct CutBound {
    pub cut: Cut,
    pub upper_bound: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChannelReport {
    pub kappa_t: f64,
    pub params: NoiseParams,
    pub validation: DensityReport,
    pub matches_pure_w: bool,
    /// Exact Wootters concurrences of the two-qubit reductions.
    pub concurrence_ab: f64,
    pub concurrence_ac: f64,
    pub concurrence_bc: f64,
    /// Convex-roof UPPER BOUND on the three-tangle, not the tangle itself.
    pub tau3_upper_bound: f64,
    /// UPPER BOUNDS on the mixed-state cut concurrences.
    pub cut_concurrence_upper_bounds: Vec<CutBound>,
}

pub fn channel_report(kappa_t: f64, roof: &RoofConfig) -> Result<ChannelReport> {
    let params = noise_params(kappa_t)?;
    let m = noisy_matrix(&params);
    let validation = inspect_density(&m, &Tolerances::default())?;
    let w = states::w().density();
    let matches_pure_w = m.max_abs_diff(w.matrix()) <= tolerance::NORM;
    let rho = DensityMatrix::new(m)?;

    let pair =
        |kept: &[usize]| -> Result<f64> { Ok(concurrence_wootters(&rho.reduce_to(kept)?)?.get()) };
    let tau3_upper_bound = minimize_roof(&rho, measures::three_tangle, roof)?.upper_bound;
    let cut_concurrence_upper_bounds = Cut::ALL
        .iter()
        .map(|&cut| {
            let r = minimize_roof(&rho, measures::cut_concurrence(cut), roof)?;
            Ok(CutBound {
                cut,
                upper_bound: r.upper_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ChannelReport {
        kappa_t,
        params,
        validation,
        matches_pure_w,
        concurrence_ab: pair(&[0, 1])?,
        concurrence_ac: pair(&[0, 2])?,
        concurrence_bc: pair(&[1, 2])?,
        tau3_upper_bound,
        cut_concurrence_upper_bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn params_examples() {
        let n = noise_params(0.0).unwrap();
        assert_eq!(n.alpha, [4.0, 0.0, 0.0, 0.0]);
        assert_eq!((n.beta_plus, n.beta_minus), (2.0, 0.0));
        let n = noise_params(0.5).unwrap();
        assert!((n.alpha[0] - 1.5530).abs() < 1e-4);
        let n = noise_params(60.0).unwrap();
        assert!(n.alpha.iter().all(|a| (a - 1.0).abs() < 1e-15));
        assert!(noise_params(-0.1).is_err());
        assert!(noise_params(f64::NAN).is_err());
        for kt in [0.0, 0.3, 1.7, 9.0] {
            let n = noise_params(kt).unwrap();
            assert!((n.alpha.iter().sum::<f64>() - 4.0).abs() < 1e-12);
            assert!((n.beta_plus + n.beta_minus - 2.0).abs() < 1e-12);
            assert!(n.alpha.iter().all(|&a| a >= 0.0) && n.beta_minus >= 0.0);
        }
    }

    #[test]
    fn zero_noise_is_w() {
        let e = epsilon_x_w(0.0).unwrap();
        assert!(e.matrix().max_abs_diff(states::w().density().matrix()) <= 1e-12);
    }

    #[test]
    fn valid_density_for_all_strengths() {
        for kt in [0.0, 0.1, 0.5, 1.0, 2.0, 10.0] {
            let e = epsilon_x_w(kt).unwrap();
            assert!((e.matrix().trace().re - 1.0).abs() < 1e-13);
            let ev = e.eigenvalues().unwrap();
            assert!(ev.iter().all(|&x| x > -1e-12 && x < 1.0 + 1e-12));
        }
    }

    #[test]
    fn report_at_zero_noise() {
        let cfg = RoofConfig {
            restarts: 8,
            ..RoofConfig::default()
        };
        let r = channel_report(0.0, &cfg).unwrap();
        assert!(r.matches_pure_w && r.validation.is_valid());
        assert!((r.concurrence_ab - 0.5).abs() < 1e-9);
        assert!((r.concurrence_ac - FRAC_1_SQRT_2).abs() < 1e-9);
        assert!((r.concurrence_bc - FRAC_1_SQRT_2).abs() < 1e-9);
        assert!(r.tau3_upper_bound <= 1e-4);
    }

    #[test]
    fn reductions_vanish_under_strong_noise() {
        let rho = epsilon_x_w(10.0).unwrap();
        for kept in [[0, 1], [0, 2], [1, 2]] {
            let c = concurrence_wootters(&rho.reduce_to(&kept).unwrap()).unwrap();
            assert!(c.get() < 1e-9);
        }
    }
}
