//! `quartic`: batch front end of the identity verifier.
//!
//! - `verify`: run identities and print per-identity aggregates
//! - `sweep`: run identities and emit every record as JSON
//! - `list`: print the catalog
//!
//! Exit codes: 0 when every verification passed, 1 on any failure, 2 on usage errors.

mod args;
mod render;

use std::io::Write;
use std::process::ExitCode;

use args::{Cli, Command, Format, RunArgs};
use clap::Parser;
use quartic_core::identities::{find, fixture_registry, registry, sweep_many, IdentityDef, Mode};

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match (cli.list, cli.command) {
        (true, _) | (false, Some(Command::List { format: Format::Text })) => print(&render::catalog(registry(), false)),
        (false, Some(Command::List { format: Format::Json })) => print(&render::catalog(registry(), true)),
        (false, Some(Command::Verify(a))) => run(&a, a.seed.unwrap_or(1), Format::Text),
        (false, Some(Command::Sweep(a))) => match a.seed {
            Some(seed) => run(&a, seed, Format::Json),
            None => usage("sweep needs an explicit --seed"),
        },
        (false, None) => usage("no subcommand given; try `quartic --help`"),
    }
}

fn print(s: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(s.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage(&format!("cannot write output: {e}")),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

/// Catalog ids closest to `id`, best first.
fn suggestions(id: &str, include_fixtures: bool) -> Vec<&'static str> {
    let fixtures: &'static [IdentityDef] = if include_fixtures { fixture_registry() } else { &[] };
    let mut scored: Vec<(f64, &'static str)> =
        registry().iter().chain(fixtures).map(|d| (strsim::jaro_winkler(id, &d.id), d.id.as_str())).collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(b.1)));
    scored.into_iter().take(3).map(|(_, id)| id).collect()
}

fn select(a: &RunArgs) -> Result<Vec<&'static IdentityDef>, String> {
    if a.id == "all" {
        let mode: Mode = a.mode.into();
        let p_zero = quartic_core::scalar_qpoch::parse_decimal(&a.p).is_some_and(|p| p == Default::default());
        let picked: Vec<_> = registry().iter().filter(|d| mode.resolve(d, p_zero).is_ok()).collect();
        if picked.is_empty() {
            return Err(format!("no catalog identity can be verified in {:?} mode", a.mode).to_lowercase());
        }
        return Ok(picked);
    }
    find(&a.id, a.fixtures).map(|d| vec![d]).map_err(|_| {
        format!("unknown identity `{}`; nearest catalog ids: {}", a.id, suggestions(&a.id, a.fixtures).join(", "))
    })
}

fn run(a: &RunArgs, seed: u64, default_format: Format) -> ExitCode {
    let defs = match select(a) {
        Ok(d) => d,
        Err(e) => return usage(&e),
    };
    let report = match sweep_many(&defs, &a.config(seed)) {
        Ok(r) => r,
        Err(e) => return usage(&e.to_string()),
    };
    if report.records.is_empty() {
        return usage("the selection produced no verifications (check --nmax/--mmax)");
    }
    let body = match a.format.unwrap_or(default_format) {
        Format::Json => render::json(&report, &a.id),
        Format::Text => render::text(&report),
    };
    let written = match &a.output {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).and_then(|_| out.flush()).map_err(|e| format!("cannot write output: {e}"))
        }
    };
    if let Err(e) = written {
        return usage(&e);
    }
    if report.summary.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
