//! Named invariant suites with a machine-readable report.

use serde::Serialize;

use crate::convexroof::{measures, minimize_roof, optimal_ghzw_ensemble, RoofConfig};
use crate::entanglement::{
    concurrence_wootters, cut_concurrence_amplitudes, three_tangle_amplitudes, three_tangle_ghzw,
    Cut, GhzwMixtureParams,
};
use crate::error::{invalid, Result};
use crate::quadrature::QuadratureConfig;
use crate::random::{random_density, random_pure_state, rng};
use crate::teleport::{
    avg_fidelity, avg_fidelity_closed, fidelity_ghz_closed, fidelity_w_closed, scheme_unitary,
    teleport_output, SchemeKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Monogamy,
    Roof,
    Unitarity,
    Fidelity,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "monogamy" => Suite::Monogamy,
            "roof" => Suite::Roof,
            "unitarity" => Suite::Unitarity,
            "fidelity" => Suite::Fidelity,
            other => return invalid(format!("unknown suite {other:?}")),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ValidateConfig {
    pub seed: u64,
    pub monogamy_samples: usize,
    pub roof_samples: usize,
    pub roof: RoofConfig,
    pub quadrature: QuadratureConfig,
}

impl Default for ValidateConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            monogamy_samples: 1000,
            roof_samples: 50,
            roof: RoofConfig::default(),
            quadrature: QuadratureConfig::default(),
        }
    }
}

/// One invariant: the worst observed deviation against its tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(suite: Suite, name: &str, worst: f64, tolerance: f64) -> Self {
        Self {
            suite,
            name: name.to_owned(),
            worst,
            tolerance,
            // NaN fails
            passed: worst <= tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub suite: Suite,
    pub passed: bool,
    pub first_failure: Option<String>,
    pub checks: Vec<Check>,
}

pub fn run_suite(suite: Suite, cfg: &ValidateConfig) -> Result<ValidationReport> {
    let checks = match suite {
        Suite::All => {
            let mut all = unitarity_checks();
            all.extend(fidelity_checks(cfg)?);
            all.extend(monogamy_checks(cfg)?);
            all.extend(roof_checks(cfg)?);
            all
        }
        Suite::Monogamy => monogamy_checks(cfg)?,
        Suite::Roof => roof_checks(cfg)?,
        Suite::Unitarity => unitarity_checks(),
        Suite::Fidelity => fidelity_checks(cfg)?,
    };
    let first_failure = checks.iter().find(|c| !c.passed).map(|c| c.name.clone());
    Ok(ValidationReport {
        suite,
        passed: first_failure.is_none(),
        first_failure,
        checks,
    })
}

pub fn unitarity_checks() -> Vec<Check> {
    [
        (SchemeKind::Ghz, "u_ghz_unitary"),
        (SchemeKind::W, "u_w_unitary"),
    ]
    .into_iter()
    .map(|(k, name)| {
        let r = scheme_unitary(k).unitary.unitarity_residual();
        Check::new(Suite::Unitarity, name, r, 1e-12)
    })
    .collect()
}

/// CKW for each focus qubit, and `C²_(jk)i − C²_ij − C²_ik = τ₃`.
pub fn monogamy_checks(cfg: &ValidateConfig) -> Result<Vec<Check>> {
    let mut r = rng(cfg.seed);
    let (mut ckw, mut residual) = (0.0_f64, 0.0_f64);
    for _ in 0..cfg.monogamy_samples {
        let psi = random_pure_state(3, &mut r)?;
        let rho = psi.density();
        let tau = three_tangle_amplitudes(psi.amplitudes());
        let pair = |i: usize, j: usize| -> Result<f64> {
            Ok(concurrence_wootters(&rho.reduce_to(&[i.min(j), i.max(j)])?)?.get())
        };
        for cut in Cut::ALL {
            let focus = cut.single();
            let others: Vec<usize> = (0..3).filter(|&q| q != focus).collect();
            let c1 = pair(focus, others[0])?;
            let c2 = pair(focus, others[1])?;
            let cut_c = cut_concurrence_amplitudes(psi.amplitudes(), cut);
            let res = cut_c * cut_c - c1 * c1 - c2 * c2;
            ckw = ckw.max(-res);
            residual = residual.max((res - tau).abs());
        }
    }
    Ok(vec![
        Check::new(Suite::Monogamy, "ckw_inequality", ckw.max(0.0), 1e-9),
        Check::new(
            Suite::Monogamy,
            "residual_equals_three_tangle",
            residual,
            1e-8,
        ),
    ])
}

pub fn roof_checks(cfg: &ValidateConfig) -> Result<Vec<Check>> {
    let mut r = rng(cfg.seed);
    let mut wootters_gap = 0.0_f64;
    for _ in 0..cfg.roof_samples {
        let rho = random_density(2, 2, &mut r)?;
        let exact = concurrence_wootters(&rho)?.get();
        let bound = minimize_roof(&rho, measures::concurrence, &cfg.roof)?.upper_bound;
        wootters_gap = wootters_gap.max((bound - exact).abs());
    }

    let params = GhzwMixtureParams::standard();
    let mut tangle_gap = 0.0_f64;
    for p in [0.3, 0.65, 0.7, 0.9] {
        let rho = params.density(p)?;
        let exact = three_tangle_ghzw(p, &params)?.get();
        let bound = minimize_roof(&rho, measures::three_tangle, &cfg.roof)?.upper_bound;
        tangle_gap = tangle_gap.max((bound - exact).abs());
    }

    let (mut recon, mut member) = (0.0_f64, 0.0_f64);
    for k in 0..=20 {
        let p = params.p0 * k as f64 / 20.0;
        let ens = optimal_ghzw_ensemble(p, &params)?;
        recon = recon.max(ens.reconstruct().max_abs_diff(params.density(p)?.matrix()));
        for (_, psi) in ens.members() {
            member = member.max(three_tangle_amplitudes(psi.amplitudes()));
        }
    }

    Ok(vec![
        Check::new(Suite::Roof, "roof_matches_wootters", wootters_gap, 5e-3),
        Check::new(Suite::Roof, "roof_matches_ghzw_tangle", tangle_gap, 5e-3),
        Check::new(
            Suite::Roof,
            "zero_tangle_ensemble_reconstructs",
            recon,
            1e-10,
        ),
        Check::new(Suite::Roof, "zero_tangle_ensemble_members", member, 1e-10),
    ])
}

pub fn fidelity_checks(cfg: &ValidateConfig) -> Result<Vec<Check>> {
    let ghz = scheme_unitary(SchemeKind::Ghz);
    let w = scheme_unitary(SchemeKind::W);
    let (mut g, mut wg) = (0.0_f64, 0.0_f64);
    for it in 0..17 {
        let theta = std::f64::consts::PI * it as f64 / 16.0;
        for ip in 0..9 {
            let phi = 2.0 * std::f64::consts::PI * ip as f64 / 8.0;
            for k in 0..11 {
                let p = k as f64 / 10.0;
                let fg = teleport_output(&ghz, theta, phi, p)?.fidelity;
                g = g.max((fg - fidelity_ghz_closed(theta, p)?).abs());
                let fw = teleport_output(&w, theta, phi, p)?.fidelity;
                wg = wg.max((fw - fidelity_w_closed(p)?).abs());
            }
        }
    }
    let mut avg = 0.0_f64;
    for k in 0..11 {
        let p = k as f64 / 10.0;
        for (kind, scheme) in [(SchemeKind::Ghz, &ghz), (SchemeKind::W, &w)] {
            let num = avg_fidelity(scheme, p, &cfg.quadrature)?;
            avg = avg.max((num - avg_fidelity_closed(kind, p)?).abs());
        }
    }
    Ok(vec![
        Check::new(Suite::Fidelity, "ghz_fidelity_closed_form", g, 1e-10),
        Check::new(Suite::Fidelity, "w_fidelity_closed_form", wg, 1e-10),
        Check::new(Suite::Fidelity, "average_fidelity_closed_form", avg, 1e-9),
    ])
}
