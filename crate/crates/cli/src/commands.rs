use std::process::ExitCode;

use serde_json::{json, Map, Value};
use tritangle::convexroof::{measures, minimize_roof, RoofConfig};
use tritangle::entanglement::{
    c_abc_mixture, concurrence_pure2, concurrence_wootters, cut_concurrence_pure,
    eof_from_concurrence, groverian_from_concurrence, monogamy_residual, reduced_concurrences_qc,
    three_tangle_ghzw, three_tangle_pure, Cut, GhzwMixtureParams,
};
use tritangle::noisychan::channel_report;
use tritangle::qcore::io::{read_state_file, State};
use tritangle::quadrature::QuadratureConfig;
use tritangle::teleport::{
    avg_fidelity, avg_fidelity_closed, critical_values, fidelity_ghz_closed, fidelity_w_closed,
    scheme_unitary, teleport_output, SchemeKind,
};
use tritangle::validate::{run_suite, Suite, ValidateConfig};
use tritangle::{DensityMatrix, Error, Result};

use crate::output::{num, render, Cell, Format, Report, Table};
use crate::{Cli, Command, RoofArgs, Sweep};

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let (report, default_format, code) = match &cli.command {
        Command::Fig1 { sweep } => (fig1(sweep)?, Format::Csv, ExitCode::SUCCESS),
        Command::Fig4 {
            sweep,
            theta_nodes,
            phi_nodes,
        } => {
            let quad = QuadratureConfig {
                theta_nodes: *theta_nodes,
                phi_nodes: *phi_nodes,
            };
            (fig4(sweep, &quad)?, Format::Csv, ExitCode::SUCCESS)
        }
        Command::Measures { file, roof } => {
            let state = read_state_file(file)?;
            let r = measures_report(&state, &roof_config(roof, cli.seed))?;
            (r, Format::Json, ExitCode::SUCCESS)
        }
        Command::Teleport {
            scheme,
            p,
            theta,
            phi,
        } => (
            teleport(scheme.parse()?, *theta, *phi, *p)?,
            Format::Json,
            ExitCode::SUCCESS,
        ),
        Command::Noisy {
            kappa_t,
            start,
            stop,
            steps,
            roof,
        } => {
            let grid = match kappa_t {
                Some(kt) => vec![*kt],
                None => {
                    if *start < 0.0 {
                        return Err(Error::InvalidArgument("κt must be non-negative".into()));
                    }
                    grid(*start, *stop, *steps)?
                }
            };
            (
                noisy(&grid, &roof_config(roof, cli.seed))?,
                Format::Csv,
                ExitCode::SUCCESS,
            )
        }
        Command::Validate { suite, samples } => {
            let cfg = ValidateConfig {
                seed: cli.seed,
                monogamy_samples: *samples,
                ..ValidateConfig::default()
            };
            let rep = run_suite(suite.parse::<Suite>()?, &cfg)?;
            let code = if rep.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!(
                    "validation failed: {}",
                    rep.first_failure.as_deref().unwrap_or("unknown")
                );
                ExitCode::from(1)
            };
            (
                Report::Record(serde_json::to_value(&rep)?),
                Format::Json,
                code,
            )
        }
    };
    let text = render(&report, cli.format.unwrap_or(default_format));
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(code)
}

fn roof_config(args: &RoofArgs, seed: u64) -> RoofConfig {
    RoofConfig {
        restarts: args.restarts,
        max_iters: args.max_iters,
        seed,
        ..RoofConfig::default()
    }
}

fn grid(start: f64, stop: f64, steps: usize) -> Result<Vec<f64>> {
    if !start.is_finite() || !stop.is_finite() || start >= stop {
        return Err(Error::InvalidArgument(format!(
            "need finite start < stop, got {start} and {stop}"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    let n = (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| {
            if k == steps - 1 {
                stop
            } else {
                start + (stop - start) * k as f64 / n
            }
        })
        .collect())
}

fn p_grid(sweep: &Sweep) -> Result<Vec<f64>> {
    if sweep.start < 0.0 || sweep.stop > 1.0 {
        return Err(Error::InvalidArgument(format!(
            "p range [{}, {}] is not inside [0, 1]",
            sweep.start, sweep.stop
        )));
    }
    grid(sweep.start, sweep.stop, sweep.steps)
}

fn fig1(sweep: &Sweep) -> Result<Report> {
    let params = GhzwMixtureParams::standard();
    let mut t = Table::new(vec!["p", "c_ab", "c_ac", "c_bc", "tau3", "c_abc"]);
    for p in p_grid(sweep)? {
        let red = reduced_concurrences_qc(p)?;
        t.push(vec![
            p.into(),
            red.ab.get().into(),
            red.ac.get().into(),
            red.bc.get().into(),
            three_tangle_ghzw(p, &params)?.get().into(),
            c_abc_mixture(p)?.get().into(),
        ]);
    }
    Ok(Report::Table(t))
}

fn fig4(sweep: &Sweep, quad: &QuadratureConfig) -> Result<Report> {
    let ghz = scheme_unitary(SchemeKind::Ghz);
    let w = scheme_unitary(SchemeKind::W);
    let mut t = Table::new(vec![
        "p",
        "fbar_ghz_closed",
        "fbar_ghz_numeric",
        "fbar_w_closed",
        "fbar_w_numeric",
        "c_abc",
    ]);
    for p in p_grid(sweep)? {
        t.push(vec![
            p.into(),
            avg_fidelity_closed(SchemeKind::Ghz, p)?.into(),
            avg_fidelity(&ghz, p, quad)?.into(),
            avg_fidelity_closed(SchemeKind::W, p)?.into(),
            avg_fidelity(&w, p, quad)?.into(),
            c_abc_mixture(p)?.get().into(),
        ]);
    }
    let c = critical_values();
    t.summary = Some(json!({
        "f_ghz": num(c.f_ghz),
        "f_w": num(c.f_w),
        "p_star": num(c.p_star),
        "p0": num(c.p0),
        "p1": num(c.p1),
    }));
    Ok(Report::Table(t))
}

fn pair_concurrences(rho: &DensityMatrix) -> Result<Value> {
    let c = |kept: &[usize]| -> Result<Value> {
        Ok(num(concurrence_wootters(&rho.reduce_to(kept)?)?.get()))
    };
    Ok(json!({ "ab": c(&[0, 1])?, "ac": c(&[0, 2])?, "bc": c(&[1, 2])? }))
}

fn measures_report(state: &State, roof: &RoofConfig) -> Result<Report> {
    let mut out = Map::new();
    out.insert("num_qubits".into(), json!(state.num_qubits()));
    match (state, state.num_qubits()) {
        (State::Pure(psi), 2) => {
            let c = concurrence_pure2(psi)?;
            out.insert("kind".into(), json!("pure"));
            out.insert("concurrence".into(), num(c.get()));
            out.insert("eof".into(), num(eof_from_concurrence(c)?.get()));
            out.insert(
                "groverian".into(),
                num(groverian_from_concurrence(c)?.get()),
            );
        }
        (State::Mixed(rho), 2) => {
            let c = concurrence_wootters(rho)?;
            out.insert("kind".into(), json!("mixed"));
            out.insert("concurrence".into(), num(c.get()));
            out.insert("eof".into(), num(eof_from_concurrence(c)?.get()));
            // the Groverian measure is only defined here for pure states
            out.insert("groverian".into(), Value::Null);
        }
        (State::Pure(psi), 3) => {
            out.insert("kind".into(), json!("pure"));
            out.insert("tau3".into(), num(three_tangle_pure(psi)?.get()));
            let mut cuts = Map::new();
            for cut in Cut::ALL {
                cuts.insert(
                    cut.label().into(),
                    num(cut_concurrence_pure(psi, cut)?.get()),
                );
            }
            out.insert("cut_concurrence".into(), Value::Object(cuts));
            out.insert(
                "pair_concurrence".into(),
                pair_concurrences(&psi.density())?,
            );
            out.insert("monogamy_residual".into(), num(monogamy_residual(psi)?));
        }
        (State::Mixed(rho), 3) => {
            out.insert("kind".into(), json!("mixed"));
            out.insert("pair_concurrence".into(), pair_concurrences(rho)?);
            let tau = minimize_roof(rho, measures::three_tangle, roof)?;
            out.insert("tau3_upper_bound".into(), num(tau.upper_bound));
            let mut cuts = Map::new();
            for cut in Cut::ALL {
                let r = minimize_roof(rho, measures::cut_concurrence(cut), roof)?;
                cuts.insert(cut.label().into(), num(r.upper_bound));
            }
            out.insert("cut_concurrence_upper_bound".into(), Value::Object(cuts));
            out.insert("roof".into(), serde_json::to_value(roof)?);
        }
        (_, n) => {
            return Err(Error::InvalidArgument(format!(
                "measures are defined for 2- and 3-qubit states, got {n} qubits"
            )))
        }
    }
    Ok(Report::Record(Value::Object(out)))
}

fn teleport(kind: SchemeKind, theta: f64, phi: f64, p: f64) -> Result<Report> {
    let rep = teleport_output(&scheme_unitary(kind), theta, phi, p)?;
    let closed = match kind {
        SchemeKind::Ghz => fidelity_ghz_closed(theta, p)?,
        SchemeKind::W => fidelity_w_closed(p)?,
    };
    let m = rep.rho_out.matrix();
    let rho: Vec<Value> = (0..2)
        .map(|i| {
            Value::Array(
                (0..2)
                    .map(|j| json!([num(m[(i, j)].re), num(m[(i, j)].im)]))
                    .collect(),
            )
        })
        .collect();
    Ok(Report::Record(json!({
        "scheme": kind,
        "theta": num(theta),
        "phi": num(phi),
        "p": num(p),
        "fidelity": num(rep.fidelity),
        "fidelity_closed": num(closed),
        "rho_out": rho,
    })))
}

fn noisy(grid: &[f64], roof: &RoofConfig) -> Result<Report> {
    let mut t = Table::new(vec![
        "kappa_t",
        "valid",
        "trace",
        "hermiticity_residual",
        "min_eigenvalue",
        "matches_pure_w",
        "c_ab",
        "c_ac",
        "c_bc",
        "tau3_upper_bound",
        "cut_ab_c_upper_bound",
        "cut_ac_b_upper_bound",
        "cut_bc_a_upper_bound",
    ]);
    for &kt in grid {
        let r = channel_report(kt, roof)?;
        let mut row: Vec<Cell> = vec![
            kt.into(),
            r.validation.is_valid().into(),
            r.validation.trace.into(),
            r.validation.hermiticity_residual.into(),
            r.validation.min_eigenvalue.into(),
            r.matches_pure_w.into(),
            r.concurrence_ab.into(),
            r.concurrence_ac.into(),
            r.concurrence_bc.into(),
            r.tau3_upper_bound.into(),
        ];
        row.extend(
            r.cut_concurrence_upper_bounds
                .iter()
                .map(|c| Cell::Num(c.upper_bound)),
        );
        t.push(row);
    }
    Ok(Report::Table(t))
}
