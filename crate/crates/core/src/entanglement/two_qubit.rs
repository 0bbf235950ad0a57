use super::measure::{MeasureKind, MeasureValue};
use crate::error::{invalid, Result};
use crate::qcore::{eigen, pauli, DensityMatrix, PureState, C64};
use crate::tolerance;

/// `2|a₀₀a₁₁ − a₀₁a₁₀|` on raw two-qubit amplitudes.
pub fn concurrence_amplitudes(a: &[C64]) -> f64 {
    2.0 * (a[0] * a[3] - a[1] * a[2]).norm()
}

pub fn concurrence_pure2(psi: &PureState) -> Result<MeasureValue> {
    if psi.num_qubits() != 2 {
        return invalid(format!(
            "pure-state concurrence needs 2 qubits, got {}",
            psi.num_qubits()
        ));
    }
    MeasureValue::new(
        MeasureKind::Concurrence,
        concurrence_amplitudes(psi.amplitudes()),
    )
}

/// Square roots of the eigenvalues of `√ρ ρ̃ √ρ`, where
/// `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`, in decreasing order.
///
/// `√ρ ρ̃ √ρ = A A†` with `A = √ρ (σ_y⊗σ_y) √ρ*`, so the λᵢ are the singular
/// values of `A`. Taking them directly avoids square roots of near-zero
/// eigenvalues, which would turn rounding noise of 1e-16 into 1e-8.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4]> {
    if rho.num_qubits() != 2 {
        return invalid(format!(
            "Wootters concurrence needs 2 qubits, got {}",
            rho.num_qubits()
        ));
    }
    let yy = pauli::spin_flip();
    let root = eigen::sqrt_psd(rho)?;
    let a = root.matmul(&yy).matmul(&root.conj());
    let sv = eigen::singular_values(&a)?;
    let mut out = [0.0; 4];
    out.copy_from_slice(&sv);
    Ok(out)
}

/// `max(0, λ₁ − λ₂ − λ₃ − λ₄)`
pub fn concurrence_wootters(rho: &DensityMatrix) -> Result<MeasureValue> {
    let l = wootters_lambdas(rho)?;
    MeasureValue::new(
        MeasureKind::Concurrence,
        (l[0] - l[1] - l[2] - l[3]).max(0.0),
    )
}

/// `h(x) = −x log₂ x − (1−x) log₂(1−x)` with `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |y: f64| if y <= 0.0 { 0.0 } else { -y * y.log2() };
    term(x) + term(1.0 - x)
}

fn check_concurrence(c: MeasureValue) -> Result<f64> {
    let v = c.value;
    if !(-tolerance::MEASURE..=1.0 + tolerance::MEASURE).contains(&v) {
        return invalid(format!("concurrence {v} outside [0, 1]"));
    }
    Ok(v.clamp(0.0, 1.0))
}

/// Entanglement of formation as a function of the concurrence.
pub fn eof_from_concurrence(c: MeasureValue) -> Result<MeasureValue> {
    let c = check_concurrence(c)?;
    let x = (1.0 + (1.0 - c * c).sqrt()) / 2.0;
    MeasureValue::new(MeasureKind::EoF, binary_entropy(x))
}

/// Groverian measure `(1/√2)[1 − √(1 − c²)]^{1/2}`.
pub fn groverian_from_concurrence(c: MeasureValue) -> Result<MeasureValue> {
    let c = check_concurrence(c)?;
    let g = std::f64::consts::FRAC_1_SQRT_2 * (1.0 - (1.0 - c * c).sqrt()).max(0.0).sqrt();
    MeasureValue::new(MeasureKind::Groverian, g)
}
