//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.

use super::matrix::{ComplexMatrix, C64};
use super::state::DensityMatrix;
use crate::error::{invalid, Error, Result};
use crate::tolerance;

/// Largest dimension the eigensolver accepts (four qubits).
pub const MAX_DIM: usize = 16;

/// Eigendecomposition `H = V Λ V†` with eigenvalues sorted in decreasing order.
///
/// Column `k` of `vectors` is the eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.vectors.column(k)
    }

    /// `V f(Λ) V†`
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let fv: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * fv[k])
                .sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|x| x)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eigh(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_square() {
        return invalid(format!(
            "eigh: {}x{} matrix is not square",
            h.rows(),
            h.cols()
        ));
    }
    let n = h.rows();
    if n == 0 || n > MAX_DIM {
        return invalid(format!("eigh: dimension {n} outside 1..={MAX_DIM}"));
    }
    if !h.is_finite() {
        return invalid("eigh: non-finite entries");
    }
    let residual = h.hermiticity_residual();
    if residual > tolerance::EIGEN_HERMITIAN {
        return invalid(format!(
            "eigh: matrix is not Hermitian (residual {residual:e})"
        ));
    }

    // Work on the exactly Hermitian part so rounding noise in the input
    // does not leak into the rotations.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);
    let threshold = tolerance::JACOBI_OFF * a.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..tolerance::JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) >= threshold {
        return Err(Error::NoConvergence(tolerance::JACOBI_MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// One Jacobi rotation annihilating `a[p][q]`.
///
/// The pivot is first made real by the phase `diag(1, e^{-iα})`, then a real
/// rotation `[[c, s], [-s, c]]` finishes the 2×2 block, so the combined
/// transform is `R = [[c, s], [-s e^{-iα}, c e^{-iα}]]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let mag = g.norm();
    if mag == 0.0 {
        return;
    }
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
    // skip pivots that are already negligible against their diagonal
    if mag < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = C64::new(0.0, 0.0);
        a[(q, p)] = C64::new(0.0, 0.0);
        return;
    }
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase = (g / mag).conj();
    let r_pp = C64::new(c, 0.0);
    let r_pq = C64::new(s, 0.0);
    let r_qp = phase * -s;
    let r_qq = phase * c;

    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * r_pp + akq * r_qp;
        a[(k, q)] = akp * r_pq + akq * r_qq;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * r_pp + vkq * r_qp;
        v[(k, q)] = vkp * r_pq + vkq * r_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = r_pp.conj() * apk + r_qp.conj() * aqk;
        a[(q, k)] = r_pq.conj() * apk + r_qq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}

/// Eigenvalues of a Hermitian matrix in decreasing order.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    eigh(h).map(|e| e.values)
}

/// Principal square root of a positive semidefinite Hermitian matrix.
///
/// Eigenvalues down to `-NOT_PSD` are treated as rounding noise and clamped
/// to zero.
pub fn sqrt_psd_matrix(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let e = eigh(m)?;
    let min = e.values.last().copied().unwrap_or(0.0);
    if min < -tolerance::NOT_PSD {
        return Err(Error::NotPsd(min));
    }
    let floor = ZERO_EIGENVALUE * e.values[0].abs().max(1.0);
    Ok(e.map_spectrum(|x| if x <= floor { 0.0 } else { x.sqrt() }))
}

/// Eigenvalues at or below this (relative to the spectral radius, floored
/// at 1) are rounding residue of an exact zero and are dropped before
/// taking square roots, where they would otherwise grow to `~1e-8`.
pub const ZERO_EIGENVALUE: f64 = 1e-14;

/// Singular values in decreasing order, by one-sided (Hestenes) Jacobi.
///
/// Small singular values come out with absolute error near machine epsilon
/// times the norm, unlike square roots of eigenvalues of `A A†`.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_finite() {
        return invalid("singular_values: non-finite entries");
    }
    let cols = m.cols();
    let mut a: Vec<Vec<C64>> = (0..cols).map(|j| m.column(j)).collect();
    let dot = |x: &[C64], y: &[C64]| -> C64 { x.iter().zip(y).map(|(p, q)| p.conj() * q).sum() };
    let norm2 = |x: &[C64]| -> f64 { x.iter().map(|z| z.norm_sqr()).sum() };

    let mut converged = false;
    for _ in 0..SVD_MAX_SWEEPS {
        let mut rotated = false;
        for j in 0..cols {
            for k in j + 1..cols {
                let alpha = norm2(&a[j]);
                let beta = norm2(&a[k]);
                let gamma = dot(&a[j], &a[k]);
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // rotate a_k by e^{-i arg γ} so the overlap is real, then
                // apply a plane rotation
                let phase = (gamma / g).conj();
                let (left, right) = a.split_at_mut(k);
                for (aj, ak) in left[j].iter_mut().zip(right[0].iter_mut()) {
                    let x = *aj;
                    let y = *ak * phase;
                    *aj = x * c - y * s;
                    *ak = x * s + y * c;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(SVD_MAX_SWEEPS));
    }
    let mut sv: Vec<f64> = a.iter().map(|col| norm2(col).sqrt()).collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    Ok(sv)
}

const SVD_MAX_SWEEPS: usize = 60;

pub fn sqrt_psd(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    sqrt_psd_matrix(rho.matrix())
}
