//! `tritangle`: figure data, entanglement measures, teleportation runs and
//! validation suites for three-qubit GHZ/W states.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "tritangle", version, about, long_about = None)]
struct Cli {
    /// Seed for every randomized step (convex-roof restarts, random test states).
    #[arg(long, env = "TRITANGLE_SEED", default_value_t = 0, global = true)]
    seed: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format [default: csv for fig1, fig4 and noisy; json otherwise].
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

/// A uniform grid `start, ..., stop` with `steps` points.
#[derive(Debug, Clone, Args)]
struct Sweep {
    /// First grid value of p.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    start: f64,
    /// Last grid value of p.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    stop: f64,
    /// Number of grid points, at least 2.
    #[arg(long, default_value_t = 201)]
    steps: usize,
}

/// Effort of the convex-roof search behind every reported upper bound.
#[derive(Debug, Clone, Args)]
struct RoofArgs {
    /// Random restarts of the local search.
    #[arg(long, default_value_t = 4)]
    restarts: usize,
    /// Sweeps per restart.
    #[arg(long, default_value_t = 50)]
    max_iters: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced concurrences, three-tangle and C_(AB)C of ρ(p) = p·GHZ + (1−p)·W.
    Fig1 {
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Closed-form and simulated average teleportation fidelities against p.
    Fig4 {
        #[command(flatten)]
        sweep: Sweep,
        /// Gauss–Legendre nodes in cos θ.
        #[arg(long, default_value_t = 32)]
        theta_nodes: usize,
        /// Uniform nodes in φ.
        #[arg(long, default_value_t = 16)]
        phi_nodes: usize,
    },
    /// Entanglement measures of a 2- or 3-qubit state read from a JSON file.
    Measures {
        /// State file: {"num_qubits", "amplitudes": [[re, im], ...]} or {"num_qubits", "matrix": [[[re, im], ...], ...]}.
        file: PathBuf,
        #[command(flatten)]
        roof: RoofArgs,
    },
    /// Teleport cos(θ/2)e^{iφ/2}|0⟩ + sin(θ/2)e^{−iφ/2}|1⟩ through ρ(p).
    Teleport {
        #[arg(value_parser = ["ghz", "w"])]
        scheme: String,
        /// Weight of the GHZ component of the channel.
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phi: f64,
    },
    /// Validity and entanglement of the decohered W state ε_x(ρ_W).
    Noisy {
        /// Evaluate a single κt instead of a sweep.
        #[arg(long = "kappa-t", conflicts_with_all = ["start", "stop", "steps"])]
        kappa_t: Option<f64>,
        /// First κt of the sweep.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        start: f64,
        /// Last κt of the sweep.
        #[arg(long, default_value_t = 3.0)]
        stop: f64,
        /// Number of κt values, at least 2.
        #[arg(long, default_value_t = 7)]
        steps: usize,
        #[command(flatten)]
        roof: RoofArgs,
    },
    /// Run an invariant suite; exits 1 and names the first failure if any check fails.
    Validate {
        #[arg(default_value = "all", value_parser = ["all", "monogamy", "roof", "unitarity", "fidelity"])]
        suite: String,
        /// Random states in the monogamy suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
