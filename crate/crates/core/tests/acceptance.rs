//! Acceptance gate: one PASS/FAIL line per criterion, each with its own
//! tolerances and wall-clock limit. Exits non-zero if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use tritangle::convexroof::{measures, minimize_roof, optimal_ghzw_ensemble, RoofConfig};
use tritangle::entanglement::{
    c_abc_mixture, concurrence_wootters, cut_concurrence_amplitudes, three_tangle_amplitudes,
    three_tangle_ghzw, Cut, GhzwMixtureParams,
};
use tritangle::noisychan::epsilon_x_w;
use tritangle::quadrature::QuadratureConfig;
use tritangle::random::{random_density, random_pure_state, rng};
use tritangle::states;
use tritangle::teleport::{
    avg_fidelity, critical_values, scheme_unitary, teleport_output, SchemeKind,
};
use tritangle::Result;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: String) -> Outcome {
    Outcome { ok, detail }
}

fn within(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn mixture_constants() -> Result<Outcome> {
    let p = GhzwMixtureParams::standard();
    let ok = within(p.p0, 0.6137, 5e-4)
        && within(p.p1, 0.7236, 5e-4)
        && within(p.t1, 0.2764, 5e-4)
        && within(p.s, 2.0, 1e-12);
    Ok(outcome(
        ok,
        format!("p0={:.6} p1={:.6} t1={:.6} s={:.12}", p.p0, p.p1, p.t1, p.s),
    ))
}

fn critical_fidelities() -> Result<Outcome> {
    let c = critical_values();
    let ok = within(c.f_ghz, 0.774549, 1e-6)
        && within(c.f_w, 0.833333, 1e-6)
        && within(c.p_star, 7.0 / 13.0, 1e-9);
    Ok(outcome(
        ok,
        format!("f_ghz={:.7} f_w={:.7} p*={:.12}", c.f_ghz, c.f_w, c.p_star),
    ))
}

fn fidelity_closed_forms() -> Result<Outcome> {
    let ghz = scheme_unitary(SchemeKind::Ghz);
    let w = scheme_unitary(SchemeKind::W);
    let (mut dg, mut dw) = (0.0_f64, 0.0_f64);
    for i in 0..17 {
        let theta = PI * i as f64 / 16.0;
        for j in 0..9 {
            let phi = TAU * j as f64 / 8.0;
            for k in 0..11 {
                let p = k as f64 / 10.0;
                let expected = ((3.0 + 5.0 * p) - (1.0 - p) * (2.0 * theta).cos()) / 8.0;
                dg = dg.max((teleport_output(&ghz, theta, phi, p)?.fidelity - expected).abs());
                dw = dw.max((teleport_output(&w, theta, phi, p)?.fidelity - (1.0 - p / 2.0)).abs());
            }
        }
    }
    let quad = QuadratureConfig::default();
    let mut da = 0.0_f64;
    for k in 0..11 {
        let p = k as f64 / 10.0;
        da = da.max((avg_fidelity(&ghz, p, &quad)? - (5.0 + 7.0 * p) / 12.0).abs());
        da = da.max((avg_fidelity(&w, p, &quad)? - (1.0 - p / 2.0)).abs());
    }
    Ok(outcome(
        dg <= 1e-10 && dw <= 1e-10 && da <= 1e-9,
        format!("ghz={dg:.2e} w={dw:.2e} avg={da:.2e}"),
    ))
}

fn perfect_teleportation() -> Result<Outcome> {
    let mut r = rng(20);
    let mut worst = 0.0_f64;
    for (kind, p) in [(SchemeKind::Ghz, 1.0), (SchemeKind::W, 0.0)] {
        let scheme = scheme_unitary(kind);
        for _ in 0..20 {
            let theta = r.random_range(0.0..PI);
            let phi = r.random_range(0.0..TAU);
            worst = worst.max((teleport_output(&scheme, theta, phi, p)?.fidelity - 1.0).abs());
        }
    }
    Ok(outcome(worst <= 1e-12, format!("max |F-1|={worst:.2e}")))
}

fn c_abc_profile() -> Result<Outcome> {
    let p0 = GhzwMixtureParams::standard().p0;
    let end0 = c_abc_mixture(0.0)?.get();
    let end1 = c_abc_mixture(1.0)?.get();
    let mut zero = 0.0_f64;
    let (lo, hi) = (1.0 / 3.0 + 1e-6, p0 - 1e-6);
    for k in 0..=200 {
        let p = lo + (hi - lo) * k as f64 / 200.0;
        zero = zero.max(c_abc_mixture(p)?.get());
    }
    // largest step, where it happens, and how many steps exceed the limit
    let (mut jump, mut at, mut over) = (0.0_f64, 0.0, 0);
    let mut prev = end0;
    for k in 1..=200 {
        let p = k as f64 / 200.0;
        let v = c_abc_mixture(p)?.get();
        let step = (v - prev).abs();
        if step >= 0.02 {
            over += 1;
        }
        if step > jump {
            (jump, at) = (step, p);
        }
        prev = v;
    }
    let ok = within(end0, 1.0, 1e-12) && within(end1, 1.0, 1e-12) && zero == 0.0 && jump < 0.02;
    Ok(outcome(
        ok,
        format!(
            "c(0)={end0:.12} c(1)={end1:.12} plateau_max={zero:.2e} \
             max_step={jump:.4} ending at p={at:.3} steps>=0.02: {over}"
        ),
    ))
}

fn monogamy() -> Result<Outcome> {
    let mut r = rng(1000);
    let (mut ckw, mut res) = (0.0_f64, 0.0_f64);
    for _ in 0..1000 {
        let psi = random_pure_state(3, &mut r)?;
        let rho = psi.density();
        let tau = three_tangle_amplitudes(psi.amplitudes());
        for cut in Cut::ALL {
            let f = cut.single();
            let mut pair_sq = 0.0;
            for o in (0..3).filter(|&q| q != f) {
                let c = concurrence_wootters(&rho.reduce_to(&[f.min(o), f.max(o)])?)?.get();
                pair_sq += c * c;
            }
            let cut_c = cut_concurrence_amplitudes(psi.amplitudes(), cut);
            let residual = cut_c * cut_c - pair_sq;
            ckw = ckw.max(-residual);
            res = res.max((residual - tau).abs());
        }
    }
    Ok(outcome(
        ckw <= 1e-9 && res <= 1e-8,
        format!(
            "ckw_violation={:.2e} |residual-tau|={res:.2e}",
            ckw.max(0.0)
        ),
    ))
}

fn convex_roof() -> Result<Outcome> {
    let cfg = RoofConfig::default();
    let mut r = rng(7);
    let mut dc = 0.0_f64;
    for _ in 0..50 {
        let rho = random_density(2, 2, &mut r)?;
        let exact = concurrence_wootters(&rho)?.get();
        dc = dc.max((minimize_roof(&rho, measures::concurrence, &cfg)?.upper_bound - exact).abs());
    }
    let params = GhzwMixtureParams::standard();
    let mut dt = 0.0_f64;
    for p in [0.3, 0.65, 0.7, 0.9] {
        let rho = params.density(p)?;
        let bound = minimize_roof(&rho, measures::three_tangle, &cfg)?.upper_bound;
        dt = dt.max((bound - three_tangle_ghzw(p, &params)?.get()).abs());
    }
    let (mut recon, mut member) = (0.0_f64, 0.0_f64);
    for k in 0..=40 {
        let p = params.p0 * k as f64 / 40.0;
        let ens = optimal_ghzw_ensemble(p, &params)?;
        recon = recon.max(ens.reconstruct().max_abs_diff(params.density(p)?.matrix()));
        for (_, psi) in ens.members() {
            member = member.max(three_tangle_amplitudes(psi.amplitudes()));
        }
    }
    Ok(outcome(
        dc <= 5e-3 && dt <= 5e-3 && recon <= 1e-10 && member <= 1e-10,
        format!("wootters={dc:.2e} ghzw={dt:.2e} recon={recon:.2e} member_tau={member:.2e}"),
    ))
}

fn noisy_channel() -> Result<Outcome> {
    let d0 = epsilon_x_w(0.0)?
        .matrix()
        .max_abs_diff(states::w().density().matrix());
    let (mut dtr, mut min_ev) = (0.0_f64, f64::INFINITY);
    for k in 0..20 {
        let kt = 0.25 * k as f64 + 0.01 * (k * k) as f64;
        let e = epsilon_x_w(kt)?;
        dtr = dtr.max((e.matrix().trace().re - 1.0).abs());
        min_ev = min_ev.min(e.eigenvalues()?.into_iter().fold(f64::INFINITY, f64::min));
    }
    Ok(outcome(
        d0 <= 1e-12 && dtr <= 1e-13 && min_ev >= -1e-12,
        format!("|eps(0)-W|={d0:.2e} trace_err={dtr:.2e} min_eig={min_ev:.3e}"),
    ))
}

fn unitarity() -> Result<Outcome> {
    let g = scheme_unitary(SchemeKind::Ghz).unitary.unitarity_residual();
    let w = scheme_unitary(SchemeKind::W).unitary.unitarity_residual();
    Ok(outcome(
        g <= 1e-12 && w <= 1e-12,
        format!("u_ghz={g:.2e} u_w={w:.2e}"),
    ))
}

type Criterion = (&'static str, Duration, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "mixture constants",
            Duration::from_secs(1),
            mixture_constants,
        ),
        (
            "critical fidelities",
            Duration::from_secs(1),
            critical_fidelities,
        ),
        (
            "fidelity closed forms",
            Duration::from_secs(30),
            fidelity_closed_forms,
        ),
        (
            "perfect teleportation",
            Duration::from_secs(5),
            perfect_teleportation,
        ),
        ("c_(AB)C profile", Duration::from_secs(5), c_abc_profile),
        ("monogamy", Duration::from_secs(60), monogamy),
        ("convex roof", Duration::from_secs(300), convex_roof),
        ("noisy channel", Duration::from_secs(5), noisy_channel),
        ("scheme unitarity", Duration::from_secs(1), unitarity),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(o) => (o.ok && elapsed <= *limit, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name}: {detail} [{:.3}s / {}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
