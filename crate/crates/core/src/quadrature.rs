//! Gauss–Legendre rules and averages over the Bloch sphere.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
///
/// Roots come from Newton's method on the three-term recurrence, started at
/// the Chebyshev-like guess `cos(π(i − 1/4)/(n + 1/2))`.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return invalid("Gauss-Legendre rule needs at least one node");
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    Ok((nodes, weights))
}

/// `(P_n(x), P_n'(x))`
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Product rule for `(1/4π) ∫₀^{2π} dφ ∫₀^π dθ sin θ F(θ, φ)`: Gauss–Legendre
/// in `cos θ` and the uniform rule in `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureConfig {
    pub theta_nodes: usize,
    pub phi_nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            theta_nodes: 32,
            phi_nodes: 16,
        }
    }
}

pub const MIN_NODES: usize = 8;

/// Sphere average of `f(θ, φ)` with respect to the normalized measure
/// `sin θ dθ dφ / 4π`.
pub fn sphere_average(
    cfg: &QuadratureConfig,
    mut f: impl FnMut(f64, f64) -> Result<f64>,
) -> Result<f64> {
    if cfg.theta_nodes < MIN_NODES || cfg.phi_nodes < MIN_NODES {
        return invalid(format!(
            "quadrature needs at least {MIN_NODES} nodes per axis, got {}x{}",
            cfg.theta_nodes, cfg.phi_nodes
        ));
    }
    let (u, wu) = gauss_legendre(cfg.theta_nodes)?;
    let dphi = 2.0 * PI / cfg.phi_nodes as f64;
    let mut total = 0.0;
    for (&ui, &wi) in u.iter().zip(&wu) {
        let theta = ui.clamp(-1.0, 1.0).acos();
        for k in 0..cfg.phi_nodes {
            total += wi * dphi * f(theta, k as f64 * dphi)?;
        }
    }
    Ok(total / (4.0 * PI))
}
