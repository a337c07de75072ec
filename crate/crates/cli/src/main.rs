//! `qdot`: bound states of a finite circular quantum dot with Rashba
//! spin-orbit coupling.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qdot", version, about = "Bound states of a circular quantum dot with Rashba coupling")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Scan grid points across the energy window.
    #[arg(long, global = true, default_value_t = 2000)]
    pub grid: usize,
    /// Root refinement tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Worker threads for `table` and `sweep` (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Energy levels for one (v, beta, m).
    Spectrum(SpectrumArgs),
    /// Normalized radial profiles u(r), w(r) of one level.
    Wavefunction(WavefunctionArgs),
    /// Recompute the reference table and compare cell by cell.
    Table(TableArgs),
    /// Levels over a range of beta for several m.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Dimensionless well depth.
    #[arg(long, required_unless_present = "physical", allow_negative_numbers = true)]
    pub v: Option<f64>,
    /// Dimensionless Rashba strength.
    #[arg(long, required_unless_present = "physical", allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Angular momentum number.
    #[arg(long, allow_negative_numbers = true)]
    pub m: i32,
    /// Take the problem from physical inputs instead of --v/--beta.
    #[arg(long, requires_all = ["mass", "radius", "depth", "rashba"], conflicts_with_all = ["v", "beta"])]
    pub physical: bool,
    /// Effective mass in units of the free-electron mass.
    #[arg(long)]
    pub mass: Option<f64>,
    /// Dot radius in nm.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Well depth in meV.
    #[arg(long)]
    pub depth: Option<f64>,
    /// Rashba coupling constant in meV nm.
    #[arg(long, allow_negative_numbers = true)]
    pub rashba: Option<f64>,
}

#[derive(Args, Debug, Clone)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
}

#[derive(Args, Debug, Clone)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Level index, 0 for the lowest.
    #[arg(long, conflicts_with = "energy")]
    pub level: Option<usize>,
    /// Pick the level closest to this energy.
    #[arg(long, allow_negative_numbers = true)]
    pub energy: Option<f64>,
    /// Largest accepted distance between --energy and the level.
    #[arg(long, default_value_t = 1e-2)]
    pub energy_tol: f64,
    #[arg(long, default_value_t = 3.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 300)]
    pub samples: usize,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// Largest accepted |computed - reference|.
    #[arg(long, default_value_t = qdot::reference::LEVEL_TOLERANCE)]
    pub match_tol: f64,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long)]
    pub v: f64,
    /// LO:HI:STEP, HI included.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_range: String,
    /// Comma-separated list of m.
    #[arg(long, allow_hyphen_values = true)]
    pub m_list: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("qdot: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
