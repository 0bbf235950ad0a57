use serde::Serialize;

use crate::error::{invalid, Result};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    Concurrence,
    EoF,
    Groverian,
    ThreeTangle,
    CutConcurrence,
}

/// An entanglement measure value in `[0, 1]`.
///
/// Rounding excursions of up to `1e-12` outside the interval are clamped;
/// anything larger is an error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureValue {
    pub value: f64,
    pub kind: MeasureKind,
}

impl MeasureValue {
    pub fn new(kind: MeasureKind, value: f64) -> Result<Self> {
        let tol = tolerance::MEASURE;
        if !(value >= -tol && value <= 1.0 + tol) {
            return invalid(format!("{kind:?} value {value} outside [0, 1]"));
        }
        Ok(Self {
            value: value.clamp(0.0, 1.0),
            kind,
        })
    }

    pub fn get(self) -> f64 {
        self.value
    }
}

impl From<MeasureValue> for f64 {
    fn from(m: MeasureValue) -> f64 {
        m.value
    }
}
