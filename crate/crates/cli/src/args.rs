//! Command-line arguments.
//!
//! - [`Cli`]: the top-level parser with the `verify`, `sweep` and `list` subcommands
//! - [`RunArgs`]: flags shared by `verify` and `sweep`

use clap::{Args, Parser, Subcommand, ValueEnum};
use quartic_core::identities::{Mode, SweepConfig};

/// Exact and high-precision verification of the quartic series identity catalog.
#[derive(Debug, Parser)]
#[command(name = "quartic", version, about)]
pub struct Cli {
    /// Print the catalog and exit (same as the `list` subcommand).
    #[arg(long, global = false)]
    pub list: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify one identity (or all) and report per-identity aggregates; exits 1 on any failure.
    Verify(RunArgs),
    /// Sweep one identity (or all) and emit the full JSON record stream; `--seed` is required.
    Sweep(RunArgs),
    /// Print the catalog with each identity's kind, metas, constraints and anchor.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Evaluation mode flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Numeric,
    Elliptic,
    Auto,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Numeric => Mode::Numeric,
            ModeArg::Elliptic => Mode::Elliptic,
            ModeArg::Auto => Mode::Auto,
        }
    }
}

/// Report format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Flags shared by `verify` and `sweep`.
#[derive(Debug, Args)]
pub struct RunArgs {
    /// Identity id, or `all` for the whole catalog.
    #[arg(long, default_value = "all")]
    pub id: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    /// Random bindings per identity.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    /// Seed of the binding generator (defaults to 1 for `verify`; required for `sweep`).
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 4)]
    pub nmax: i64,
    #[arg(long, default_value_t = 4)]
    pub mmax: i64,
    /// Fix δ; both 0 and 1 are swept when absent.
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..=1))]
    pub delta: Option<i64>,
    /// Working precision in decimal digits.
    #[arg(long, env = "QSERIES_PRECISION", default_value_t = 60)]
    pub precision: u32,
    /// Relative tolerance of numeric and elliptic checks.
    #[arg(long, default_value = "1e-30")]
    pub eps: String,
    /// Elliptic nome.
    #[arg(long, default_value = "0.05")]
    pub p: String,
    /// Output format; `verify` defaults to text, `sweep` to json.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    /// Record wall-clock time per verification (the report is then no longer reproducible).
    #[arg(long)]
    pub timing: bool,
    /// Also resolve ids among the known-wrong test fixtures.
    #[arg(long, hide = true)]
    pub fixtures: bool,
}

impl RunArgs {
    pub fn config(&self, seed: u64) -> SweepConfig {
        SweepConfig {
            mode: self.mode.into(),
            trials: self.trials,
            seed,
            nmax: self.nmax,
            mmax: self.mmax,
            delta: self.delta,
            precision: self.precision,
            eps: self.eps.clone(),
            p: self.p.clone(),
            timing: self.timing,
        }
    }
}
