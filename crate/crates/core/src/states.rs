//! Named states used throughout: Bell, GHZ, W and Werner states.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use crate::error::{invalid, Result};
use crate::qcore::{DensityMatrix, PureState};

/// `(|00⟩ + |11⟩)/√2`
pub fn bell_phi_plus() -> PureState {
    PureState::from_real(&[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).expect("normalized")
}

/// `(|000⟩ + |111⟩)/√2`
pub fn ghz() -> PureState {
    let mut a = [0.0; 8];
    a[0b000] = FRAC_1_SQRT_2;
    a[0b111] = FRAC_1_SQRT_2;
    PureState::from_real(&a).expect("normalized")
}

/// `(|100⟩ + |010⟩ + √2|001⟩)/2`, the W state shared in the teleportation
/// schemes (qubit C carries half the weight).
pub fn w() -> PureState {
    let mut a = [0.0; 8];
    a[0b100] = 0.5;
    a[0b010] = 0.5;
    a[0b001] = SQRT_2 / 2.0;
    PureState::from_real(&a).expect("normalized")
}

/// `w |Φ+⟩⟨Φ+| + (1 − w) I/4`
pub fn werner(w: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&w) {
        return invalid(format!("Werner weight {w} outside [0, 1]"));
    }
    let bell = bell_phi_plus().density();
    let mixed = DensityMatrix::maximally_mixed(2)?;
    DensityMatrix::mixture(&[(w, &bell), (1.0 - w, &mixed)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_and_w_are_orthogonal() {
        assert_eq!(ghz().inner(&w()).norm(), 0.0);
    }

    #[test]
    fn werner_trace() {
        let rho = werner(0.8).unwrap();
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-15);
        assert!(werner(1.5).is_err());
    }
}
