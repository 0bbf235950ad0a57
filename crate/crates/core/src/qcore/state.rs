use super::eigen::hermitian_eigenvalues;
use super::matrix::{ComplexMatrix, C64, ZERO};
use crate::error::{invalid, Error, Invariant, Result};
use crate::tolerance::{self, Tolerances};

pub const MAX_QUBITS: usize = 4;

fn qubits_for_dim(dim: usize) -> Option<usize> {
    (1..=MAX_QUBITS).find(|&n| 1usize << n == dim)
}

/// Normalized pure state on 1 to 4 qubits.
///
/// Basis index `q₀q₁…` is read with qubit 0 as the most significant bit, so
/// `|100⟩` on three qubits is index 4.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        Self::with_tolerance(amplitudes, tolerance::NORM)
    }

    pub fn with_tolerance(amplitudes: Vec<C64>, tol: f64) -> Result<Self> {
        let Some(num_qubits) = qubits_for_dim(amplitudes.len()) else {
            return invalid(format!(
                "pure state needs 2^n amplitudes with 1 <= n <= {MAX_QUBITS}, got {}",
                amplitudes.len()
            ));
        };
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Validation {
                invariant: Invariant::Finite,
                value: f64::NAN,
                tolerance: 0.0,
            });
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > tol {
            return Err(Error::Validation {
                invariant: Invariant::Normalization,
                value: norm,
                tolerance: tol,
            });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Rescales to unit norm; fails on the zero vector.
    pub fn normalized(mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return invalid("cannot normalize a zero or non-finite vector");
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self::new(amplitudes)
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&num_qubits) || index >= 1 << num_qubits {
            return invalid(format!("basis state {index} on {num_qubits} qubits"));
        }
        let mut a = vec![ZERO; 1 << num_qubits];
        a[index] = C64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes: a,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn inner(&self, other: &Self) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let amps = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self::new(amps)
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            num_qubits: self.num_qubits,
            matrix: ComplexMatrix::outer(&self.amplitudes),
        }
    }
}

/// What [`inspect_density`] measured about a candidate density matrix.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DensityReport {
    pub hermiticity_residual: f64,
    pub trace: f64,
    pub trace_imag: f64,
    pub min_eigenvalue: f64,
    pub violations: Vec<Invariant>,
}

impl DensityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Measures every density-matrix invariant without failing early.
pub fn inspect_density(m: &ComplexMatrix, tol: &Tolerances) -> Result<DensityReport> {
    if !m.is_square() || qubits_for_dim(m.rows()).is_none() {
        return invalid(format!(
            "density matrix must be 2^n x 2^n with 1 <= n <= {MAX_QUBITS}, got {}x{}",
            m.rows(),
            m.cols()
        ));
    }
    if !m.is_finite() {
        return invalid("density matrix has non-finite entries");
    }
    let hermiticity_residual = m.hermiticity_residual();
    let tr = m.trace();
    let mut violations = Vec::new();
    if hermiticity_residual > tol.hermitian {
        violations.push(Invariant::Hermiticity);
    }
    if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
        violations.push(Invariant::Trace);
    }
    // The spectrum is only meaningful for (near-)Hermitian input.
    let min_eigenvalue = if hermiticity_residual <= tolerance::EIGEN_HERMITIAN {
        let herm = ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        });
        hermitian_eigenvalues(&herm)?.last().copied().unwrap_or(0.0)
    } else {
        f64::NAN
    };
    if min_eigenvalue.is_nan() || min_eigenvalue < -tol.psd {
        violations.push(Invariant::PositiveSemidefinite);
    }
    Ok(DensityReport {
        hermiticity_residual,
        trace: tr.re,
        trace_imag: tr.im,
        min_eigenvalue,
        violations,
    })
}

/// Hermitian, unit-trace, positive semidefinite matrix on 1 to 4 qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: ComplexMatrix,
}

pub fn validate_density(m: ComplexMatrix) -> Result<DensityMatrix> {
    validate_density_with(m, &Tolerances::default())
}

pub fn validate_density_with(m: ComplexMatrix, tol: &Tolerances) -> Result<DensityMatrix> {
    let report = inspect_density(&m, tol)?;
    if let Some(&invariant) = report.violations.first() {
        let (value, tolerance) = match invariant {
            Invariant::Hermiticity => (report.hermiticity_residual, tol.hermitian),
            Invariant::Trace => (report.trace, tol.trace),
            _ => (report.min_eigenvalue, tol.psd),
        };
        return Err(Error::Validation {
            invariant,
            value,
            tolerance,
        });
    }
    let num_qubits = qubits_for_dim(m.rows()).expect("checked by inspect_density");
    Ok(DensityMatrix {
        num_qubits,
        matrix: m,
    })
}

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        validate_density(m)
    }

    /// Convex combination `Σ wᵢ ρᵢ` of states on the same number of qubits.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let Some((_, first)) = parts.first() else {
            return invalid("empty mixture");
        };
        let dim = first.dim();
        let mut acc = ComplexMatrix::zeros(dim, dim);
        for &(w, rho) in parts {
            if rho.dim() != dim {
                return invalid("mixture components have different dimensions");
            }
            if w < 0.0 {
                return invalid(format!("negative mixture weight {w}"));
            }
            acc = &acc + &rho.matrix.scale_real(w);
        }
        validate_density(acc)
    }

    pub fn maximally_mixed(num_qubits: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&num_qubits) {
            return invalid(format!("{num_qubits} qubits"));
        }
        let d = 1 << num_qubits;
        Ok(Self {
            num_qubits,
            matrix: ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// `⟨ψ|ρ|ψ⟩`
    pub fn expectation(&self, psi: &PureState) -> Result<f64> {
        if psi.dim() != self.dim() {
            return invalid("state and density matrix dimensions differ");
        }
        let v = self.matrix.matvec(psi.amplitudes());
        Ok(psi.inner_raw(&v).re)
    }

    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let n = self.num_qubits + other.num_qubits;
        if n > MAX_QUBITS {
            return invalid(format!("tensor product would have {n} qubits"));
        }
        Ok(DensityMatrix {
            num_qubits: n,
            matrix: self.matrix.kron(&other.matrix),
        })
    }

    /// `U ρ U†` for a unitary `U`; the caller guarantees unitarity.
    pub fn evolve(&self, u: &ComplexMatrix) -> Result<DensityMatrix> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return invalid("unitary dimension does not match state");
        }
        Ok(DensityMatrix {
            num_qubits: self.num_qubits,
            matrix: self.matrix.conjugate_by(u),
        })
    }

    /// Traces out the listed qubits (0-based, qubit 0 most significant).
    ///
    /// Surviving qubits keep their relative order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<DensityMatrix> {
        let n = self.num_qubits;
        let mut mask = 0usize;
        for &q in traced {
            if q >= n {
                return invalid(format!("qubit {q} out of range for {n} qubits"));
            }
            mask |= 1 << (n - 1 - q);
        }
        let n_traced = mask.count_ones() as usize;
        if n_traced == 0 || n_traced == n {
            return invalid("partial trace needs a nonempty proper subset of qubits");
        }
        let kept_bits: Vec<usize> = (0..n)
            .map(|q| n - 1 - q)
            .filter(|b| mask & (1 << b) == 0)
            .collect();
        let m = n - n_traced;
        let compress = |x: usize| {
            kept_bits
                .iter()
                .fold(0usize, |acc, &b| (acc << 1) | ((x >> b) & 1))
        };
        let d = self.dim();
        let mut out = ComplexMatrix::zeros(1 << m, 1 << m);
        for x in 0..d {
            for y in 0..d {
                if x & mask == y & mask {
                    out[(compress(x), compress(y))] += self.matrix[(x, y)];
                }
            }
        }
        Ok(DensityMatrix {
            num_qubits: m,
            matrix: out,
        })
    }

    /// Reduced state on `kept` (the complement is traced out).
    pub fn reduce_to(&self, kept: &[usize]) -> Result<DensityMatrix> {
        let traced: Vec<usize> = (0..self.num_qubits).filter(|q| !kept.contains(q)).collect();
        self.partial_trace(&traced)
    }
}

impl PureState {
    fn inner_raw(&self, v: &[C64]) -> C64 {
        self.amplitudes
            .iter()
            .zip(v)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

impl TryFrom<ComplexMatrix> for DensityMatrix {
    type Error = Error;

    fn try_from(m: ComplexMatrix) -> Result<Self> {
        validate_density(m)
    }
}
