//! Seeded random states for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{invalid, Result};
use crate::qcore::{ComplexMatrix, DensityMatrix, PureState, C64};

pub type StateRng = ChaCha8Rng;

pub fn rng(seed: u64) -> StateRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<C64> {
    (0..dim)
        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

/// Haar-random pure state on `num_qubits` qubits.
pub fn random_pure_state<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> Result<PureState> {
    PureState::normalized(gaussian_vector(1 << num_qubits, rng))
}

/// Haar-random unitary via Gram–Schmidt on a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v = gaussian_vector(dim, rng);
        for u in &cols {
            let proj: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= proj * ui;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

/// Random mixed state of exact rank `rank` with uniformly drawn weights.
pub fn random_density<R: Rng + ?Sized>(
    num_qubits: usize,
    rank: usize,
    rng: &mut R,
) -> Result<DensityMatrix> {
    let dim = 1 << num_qubits;
    if rank == 0 || rank > dim {
        return invalid(format!("rank {rank} impossible in dimension {dim}"));
    }
    let u = random_unitary(dim, rng);
    let raw: Vec<f64> = (0..rank).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for (k, w) in raw.iter().enumerate() {
        m = &m + &ComplexMatrix::outer(&u.column(k)).scale_real(w / total);
    }
    DensityMatrix::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_is_unitary() {
        let mut r = rng(7);
        for d in [2, 4, 8, 16] {
            assert!(random_unitary(d, &mut r).unitarity_residual() < 1e-12);
        }
    }

    #[test]
    fn density_rank() {
        let mut r = rng(3);
        let rho = random_density(2, 2, &mut r).unwrap();
        let ev = rho.eigenvalues().unwrap();
        assert!(ev[1] > 1e-3 && ev[2].abs() < 1e-12);
    }

    #[test]
    fn seeded_draws_repeat() {
        let a = random_pure_state(3, &mut rng(11)).unwrap();
        let b = random_pure_state(3, &mut rng(11)).unwrap();
        assert_eq!(a, b);
    }
}
