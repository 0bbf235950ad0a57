use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ensemble::{ensemble_from_mixing, Ensemble, Spectral};
use crate::error::{invalid, Result};
use crate::qcore::{ComplexMatrix, DensityMatrix, C64};

/// Search settings. Unset `ensemble_size` means `rank + 2`, capped at
/// `max(rank, 6)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RoofConfig {
    pub restarts: usize,
    pub ensemble_size: Option<usize>,
    pub seed: u64,
    /// Maximum number of full parameter sweeps per restart.
    pub max_iters: usize,
    /// A sweep improving the objective by less than this counts as stalled.
    pub tolerance: f64,
}

impl Default for RoofConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            ensemble_size: None,
            seed: 0,
            max_iters: 500,
            tolerance: 1e-10,
        }
    }
}

impl RoofConfig {
    pub fn ensemble_size_for(&self, rank: usize) -> usize {
        self.ensemble_size.unwrap_or((rank + 2).min(rank.max(6)))
    }
}

#[derive(Debug, Clone)]
pub struct RoofResult {
    /// Average measure over `best_ensemble`; never below the true roof.
    pub upper_bound: f64,
    pub best_ensemble: Ensemble,
    pub restarts_used: usize,
    /// Whether the winning restart stalled at the finest step size rather
    /// than running out of sweeps.
    pub converged: bool,
}

/// `m × r` isometries `V = G₁ G₂ ⋯ G_K E_r`, where each `G` is a Givens
/// rotation `[[cos θ, −e^{−iφ} sin θ], [e^{iφ} sin θ, cos θ]]` on one pair of
/// rows and `E_r` is the first `r` columns of the identity.
///
/// One rotation per row pair gives `m(m − 1)` real parameters, which covers
/// `U(m)` up to row phases; row phases do not change the induced ensemble.
#[derive(Debug, Clone)]
pub struct GivensIsometry {
    rows: usize,
    cols: usize,
    pairs: Vec<(usize, usize)>,
}

impl GivensIsometry {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(cols <= rows, "isometry needs rows >= cols");
        let pairs = (1..rows)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        Self { rows, cols, pairs }
    }

    pub fn num_params(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Fills `out` (row-major `rows × cols`) with the isometry for `params`.
    pub fn build_into(&self, params: &[f64], out: &mut [C64]) {
        let c = self.cols;
        out.fill(C64::new(0.0, 0.0));
        for k in 0..c {
            out[k * c + k] = C64::new(1.0, 0.0);
        }
        // G₁ ⋯ G_K E: apply the last rotation first
        for (idx, &(i, j)) in self.pairs.iter().enumerate().rev() {
            let (theta, phi) = (params[2 * idx], params[2 * idx + 1]);
            let (s, co) = theta.sin_cos();
            let e = C64::from_polar(1.0, phi);
            for k in 0..c {
                let (xi, xj) = (out[i * c + k], out[j * c + k]);
                out[i * c + k] = xi * co - e.conj() * xj * s;
                out[j * c + k] = e * xi * s + xj * co;
            }
        }
    }

    pub fn build(&self, params: &[f64]) -> ComplexMatrix {
        let mut buf = vec![C64::new(0.0, 0.0); self.rows * self.cols];
        self.build_into(params, &mut buf);
        ComplexMatrix::from_vec(self.rows, self.cols, buf).expect("finite")
    }
}

/// Reusable buffers for evaluating the ensemble average at a parameter point.
struct Objective<'a, M> {
    spectral: &'a Spectral,
    iso: GivensIsometry,
    measure: M,
    mixing: Vec<C64>,
    member: Vec<C64>,
}

impl<M: Fn(&[C64]) -> f64> Objective<'_, M> {
    fn eval(&mut self, params: &[f64]) -> f64 {
        self.iso.build_into(params, &mut self.mixing);
        let r = self.iso.cols;
        let mut total = 0.0;
        for j in 0..self.iso.rows {
            self.spectral
                .member_into(&self.mixing[j * r..(j + 1) * r], &mut self.member);
            let w: f64 = self.member.iter().map(|z| z.norm_sqr()).sum();
            if w < 1e-14 {
                continue;
            }
            let inv = 1.0 / w.sqrt();
            for z in &mut self.member {
                *z *= inv;
            }
            total += w * (self.measure)(&self.member);
        }
        total
    }
}

const INITIAL_STEP: f64 = 0.6;
const MIN_STEP: f64 = 1e-7;
const STEP_SHRINK: f64 = 0.25;
const GOLDEN_ITERS: usize = 16;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimum of `f` on `[lo, hi]`. Returns the best
/// point evaluated, which need not be interior when `f` is not unimodal.
fn golden(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    for _ in 0..GOLDEN_ITERS {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
            if fc < best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
            if fd < best.1 {
                best = (d, fd);
            }
        }
    }
    best
}

struct Descent {
    params: Vec<f64>,
    value: f64,
    converged: bool,
}

/// Coordinate-wise golden-section descent with a pattern move after each
/// sweep. The bracket half-width shrinks whenever a sweep stalls.
fn local_descent(
    f: &mut impl FnMut(&[f64]) -> f64,
    mut x: Vec<f64>,
    max_sweeps: usize,
    tol: f64,
) -> Descent {
    let mut fx = f(&x);
    let mut step = INITIAL_STEP;
    let mut trial = x.clone();
    for _ in 0..max_sweeps {
        let f_start = fx;
        let x_start = x.clone();
        for k in 0..x.len() {
            trial.copy_from_slice(&x);
            let centre = x[k];
            let (t, ft) = golden(
                |t| {
                    trial[k] = t;
                    f(&trial)
                },
                centre - step,
                centre + step,
            );
            if ft < fx {
                x[k] = t;
                fx = ft;
            }
        }
        let dir: Vec<f64> = x.iter().zip(&x_start).map(|(a, b)| a - b).collect();
        if dir.iter().any(|d| *d != 0.0) {
            let (alpha, fa) = golden(
                |alpha| {
                    for ((t, s), d) in trial.iter_mut().zip(&x_start).zip(&dir) {
                        *t = s + alpha * d;
                    }
                    f(&trial)
                },
                0.0,
                3.0,
            );
            if fa < fx {
                for ((xi, s), d) in x.iter_mut().zip(&x_start).zip(&dir) {
                    *xi = s + alpha * d;
                }
                fx = fa;
            }
        }
        if f_start - fx < tol {
            if step <= MIN_STEP {
                return Descent {
                    params: x,
                    value: fx,
                    converged: true,
                };
            }
            step *= STEP_SHRINK;
        }
    }
    Descent {
        params: x,
        value: fx,
        converged: false,
    }
}

/// Multi-start search for the lowest ensemble average of `measure` over
/// decompositions of `rho`.
///
/// Restart `i` draws its starting point from stream `i` of a ChaCha8 generator
/// seeded with `cfg.seed`, and the best restart wins with ties going to the
/// lower index, so the outcome depends only on the configuration.
pub fn minimize_roof<M>(rho: &DensityMatrix, measure: M, cfg: &RoofConfig) -> Result<RoofResult>
where
    M: Fn(&[C64]) -> f64 + Copy,
{
    let spectral = Spectral::of(rho)?;
    let r = spectral.rank();
    let m = cfg.ensemble_size_for(r);
    if m < r {
        return invalid(format!("ensemble size {m} is below the rank {r}"));
    }
    if cfg.restarts == 0 {
        return invalid("at least one restart is required");
    }
    let iso = GivensIsometry::new(m, r);
    let n = iso.num_params();
    let mut obj = Objective {
        spectral: &spectral,
        iso: iso.clone(),
        measure,
        mixing: vec![C64::new(0.0, 0.0); m * r],
        member: vec![C64::new(0.0, 0.0); spectral.dim],
    };

    let mut best: Option<Descent> = None;
    let mut restarts_used = 0;
    for restart in 0..cfg.restarts {
        restarts_used += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(restart as u64);
        let x0: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        let run = local_descent(&mut |x| obj.eval(x), x0, cfg.max_iters, cfg.tolerance);
        if best.as_ref().is_none_or(|b| run.value < b.value) {
            best = Some(run);
        }
        // the measures are non-negative, so an exact zero cannot be beaten
        if best.as_ref().is_some_and(|b| b.value <= 1e-15) {
            break;
        }
    }
    let best = best.expect("at least one restart");
    let ensemble = ensemble_from_mixing(rho, &iso.build(&best.params))?;
    Ok(RoofResult {
        upper_bound: ensemble.average(measure),
        best_ensemble: ensemble,
        restarts_used,
        converged: best.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexroof::measures;
    use crate::entanglement::{concurrence_wootters, GhzwMixtureParams};
    use crate::states;

    #[test]
    fn givens_isometry_has_orthonormal_columns() {
        let iso = GivensIsometry::new(4, 2);
        assert_eq!(iso.num_params(), 12);
        let mut rng = crate::random::rng(1);
        for _ in 0..20 {
            let p: Vec<f64> = (0..12).map(|_| rng.random_range(0.0..TAU)).collect();
            let v = iso.build(&p);
            let g = v.adjoint().matmul(&v);
            assert!(g.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-13);
        }
    }

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, fx) = golden(|x| (x - 0.3) * (x - 0.3), -1.0, 1.0);
        assert!((x - 0.3).abs() < 1e-3 && fx < 1e-6);
    }

    #[test]
    fn pure_bell_roof_is_one() {
        let rho = states::bell_phi_plus().density();
        let res = minimize_roof(&rho, measures::concurrence, &RoofConfig::default()).unwrap();
        assert!((res.upper_bound - 1.0).abs() < 1e-6);
    }

    #[test]
    fn werner_roof_matches_wootters() {
        let rho = states::werner(0.8).unwrap();
        let cfg = RoofConfig {
            restarts: 16,
            ..RoofConfig::default()
        };
        let res = minimize_roof(&rho, measures::concurrence, &cfg).unwrap();
        let exact = concurrence_wootters(&rho).unwrap().value;
        assert!(
            res.upper_bound >= exact - 1e-9,
            "{} < {exact}",
            res.upper_bound
        );
        assert!(
            res.upper_bound - exact < 5e-3,
            "{} vs {exact}",
            res.upper_bound
        );
        assert!((res.upper_bound - 0.7).abs() < 5e-3);
    }

    #[test]
    fn zero_tangle_region() {
        let rho = GhzwMixtureParams::standard().density(0.5).unwrap();
        let cfg = RoofConfig {
            ensemble_size: Some(4),
            ..RoofConfig::default()
        };
        let res = minimize_roof(&rho, measures::three_tangle, &cfg).unwrap();
        assert!(res.upper_bound <= 1e-4, "{}", res.upper_bound);
        let rec = res.best_ensemble.reconstruct();
        assert!(rec.max_abs_diff(rho.matrix()) < 1e-9);
        let avg = res.best_ensemble.average(measures::three_tangle);
        assert!((avg - res.upper_bound).abs() < 1e-10);
    }

    #[test]
    fn rejects_small_ensembles() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        let cfg = RoofConfig {
            ensemble_size: Some(3),
            ..RoofConfig::default()
        };
        assert!(minimize_roof(&rho, measures::concurrence, &cfg).is_err());
    }

    #[test]
    fn deterministic_for_seed() {
        let rho = GhzwMixtureParams::standard().density(0.7).unwrap();
        let cfg = RoofConfig {
            restarts: 3,
            ensemble_size: Some(4),
            seed: 9,
            ..RoofConfig::default()
        };
        let a = minimize_roof(&rho, measures::three_tangle, &cfg).unwrap();
        let b = minimize_roof(&rho, measures::three_tangle, &cfg).unwrap();
        assert_eq!(a.upper_bound, b.upper_bound);
    }
}
