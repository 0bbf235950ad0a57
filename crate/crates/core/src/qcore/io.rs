//! JSON state files.
//!
//! Pure states: `{ "num_qubits": n, "amplitudes": [[re, im], ...] }`.
//! Density matrices: `{ "num_qubits": n, "matrix": [[[re, im], ...], ...] }`,
//! rows in order.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::matrix::{ComplexMatrix, C64};
use super::state::{validate_density, DensityMatrix, PureState, MAX_QUBITS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum StateFile {
    Pure {
        num_qubits: usize,
        amplitudes: Vec<[f64; 2]>,
    },
    Mixed {
        num_qubits: usize,
        matrix: Vec<Vec<[f64; 2]>>,
    },
}

/// A parsed and validated state.
#[derive(Debug, Clone)]
pub enum State {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl State {
    pub fn num_qubits(&self) -> usize {
        match self {
            State::Pure(p) => p.num_qubits(),
            State::Mixed(m) => m.num_qubits(),
        }
    }

    pub fn density(&self) -> DensityMatrix {
        match self {
            State::Pure(p) => p.density(),
            State::Mixed(m) => m.clone(),
        }
    }
}

fn format_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Format(msg.into()))
}

fn to_c64(z: &[f64; 2]) -> C64 {
    C64::new(z[0], z[1])
}

impl StateFile {
    pub fn into_state(self) -> Result<State> {
        match self {
            StateFile::Pure {
                num_qubits,
                amplitudes,
            } => {
                check_qubits(num_qubits)?;
                if amplitudes.len() != 1 << num_qubits {
                    return format_err(format!(
                        "{num_qubits} qubits need {} amplitudes, file has {}",
                        1 << num_qubits,
                        amplitudes.len()
                    ));
                }
                PureState::new(amplitudes.iter().map(to_c64).collect()).map(State::Pure)
            }
            StateFile::Mixed { num_qubits, matrix } => {
                check_qubits(num_qubits)?;
                let d = 1 << num_qubits;
                if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
                    return format_err(format!("{num_qubits} qubits need a {d}x{d} matrix"));
                }
                let data = matrix.iter().flatten().map(to_c64).collect();
                validate_density(ComplexMatrix::from_vec(d, d, data)?).map(State::Mixed)
            }
        }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        StateFile::Pure {
            num_qubits: psi.num_qubits(),
            amplitudes: psi.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn from_density(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        StateFile::Mixed {
            num_qubits: rho.num_qubits(),
            matrix: (0..m.rows())
                .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        format_err(format!("num_qubits must be in 1..={MAX_QUBITS}, got {n}"))
    }
}

pub fn parse_state(json: &str) -> Result<State> {
    let file: StateFile = serde_json::from_str(json)?;
    file.into_state()
}

pub fn read_state_file(path: impl AsRef<Path>) -> Result<State> {
    parse_state(&std::fs::read_to_string(path)?)
}

pub fn to_json(file: &StateFile) -> Result<String> {
    Ok(serde_json::to_string_pretty(file)?)
}
