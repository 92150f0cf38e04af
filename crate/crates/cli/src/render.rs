//! Report rendering.
//!
//! - [`json`]: the full report, its config extended with the id selector
//! - [`text`]: a fixed-width aggregate table, one row per identity, then every non-passing record
//! - [`catalog`]: the `list` output

use std::fmt::Write;

use quartic_core::identities::{IdentityDef, Record, Report, Status, Summary, SweepConfig};
use serde::Serialize;

#[derive(Serialize)]
struct ConfigOut<'a> {
    selector: &'a str,
    #[serde(flatten)]
    config: &'a SweepConfig,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    schema_version: u32,
    artifact_version: &'a str,
    config: ConfigOut<'a>,
    records: &'a [Record],
    summary: &'a Summary,
}

pub fn json(report: &Report, selector: &str) -> String {
    let out = ReportOut {
        schema_version: report.schema_version,
        artifact_version: &report.artifact_version,
        config: ConfigOut { selector, config: &report.config },
        records: &report.records,
        summary: &report.summary,
    };
    let mut s = serde_json::to_string_pretty(&out).expect("report serializes");
    s.push('\n');
    s
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::NoDecay => "no_decay",
        Status::PoleExhausted => "pole_exhausted",
    }
}

fn meta_cell(v: Option<i64>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn clip(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width - 3).collect();
        format!("{head}...")
    }
}

/// Aggregate rows in the order the identities first appear.
fn groups(records: &[Record]) -> Vec<(&str, Vec<&Record>)> {
    let mut out: Vec<(&str, Vec<&Record>)> = Vec::new();
    for r in records {
        match out.last_mut() {
            Some((id, v)) if *id == r.id => v.push(r),
            _ => out.push((&r.id, vec![r])),
        }
    }
    out
}

pub fn text(report: &Report) -> String {
    let mut s = String::new();
    let c = &report.config;
    let _ = writeln!(
        s,
        "quartic {}  seed {}  trials {}  nmax {}  mmax {}  precision {}  eps {}  p {}",
        report.artifact_version, c.seed, c.trials, c.nmax, c.mmax, c.precision, c.eps, c.p
    );
    let _ = writeln!(
        s,
        "{:<28} {:<9} {:>6} {:>6} {:>6} {:>8} {:>6} {:>9}  {}",
        "id", "mode", "runs", "pass", "fail", "no_decay", "poles", "resampled", "max residual"
    );
    for (id, recs) in groups(&report.records) {
        let count = |st: Status| recs.iter().filter(|r| r.status == st).count();
        let resampled: usize = recs.iter().map(|r| r.poles_resampled).sum();
        let worst = recs
            .iter()
            .filter(|r| !r.residual.is_empty())
            .map(|r| r.residual.as_str())
            .max_by(|a, b| residual_key(a).total_cmp(&residual_key(b)))
            .map_or_else(|| "-".to_string(), short_residual);
        let mode = serde_json::to_value(recs[0].mode).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        let _ = writeln!(
            s,
            "{:<28} {:<9} {:>6} {:>6} {:>6} {:>8} {:>6} {:>9}  {}",
            clip(id, 28),
            mode,
            recs.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::NoDecay),
            count(Status::PoleExhausted),
            resampled,
            clip(&worst, 24)
        );
    }
    let bad: Vec<&Record> = report.records.iter().filter(|r| r.status != Status::Pass).collect();
    if !bad.is_empty() {
        let _ = writeln!(s, "\nnon-passing records:");
        for r in bad {
            let binding: Vec<String> = r.binding.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                s,
                "  {} [{}] trial {} n={} m={} δ={} status={} binding {{{}}}",
                r.id,
                r.paper_anchor,
                r.trial,
                meta_cell(r.n),
                meta_cell(r.m),
                meta_cell(r.delta),
                status_name(r.status),
                binding.join(", ")
            );
            if let (Some(l), Some(rh)) = (&r.lhs, &r.rhs) {
                let _ = writeln!(s, "    lhs      = {l}\n    rhs      = {rh}\n    residual = {}", r.residual);
            }
            if let Some(d) = &r.detail {
                let _ = writeln!(s, "    {d}");
            }
        }
    }
    let m = &report.summary;
    let _ = writeln!(
        s,
        "\nsummary: pass {}  fail {}  no_decay {}  pole_exhausted {}  resampled {}",
        m.pass, m.fail, m.no_decay, m.pole_exhausted, m.resampled
    );
    s
}

/// A scientific residual shortened to four significant digits; rationals are kept.
fn short_residual(r: &str) -> String {
    match r.parse::<f64>() {
        Ok(x) if !r.contains('/') && x != 0.0 => format!("{x:.3e}"),
        _ => r.to_string(),
    }
}

/// Orders residual strings by magnitude: exact rationals and scientific decimals alike.
fn residual_key(r: &str) -> f64 {
    let mag = |t: &str| t.trim_start_matches('-').parse::<f64>().unwrap_or(f64::INFINITY);
    match r.split_once('/') {
        Some((n, d)) => mag(n) / mag(d),
        None => mag(r),
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    id: &'a str,
    kind: &'static str,
    metas: String,
    constraints: &'a str,
    paper_anchor: &'a str,
}

fn entry(d: &IdentityDef) -> Entry<'_> {
    Entry {
        id: &d.id,
        kind: d.kind.as_str(),
        metas: d.metas.iter().map(|m| m.letter()).collect(),
        constraints: &d.constraints,
        paper_anchor: d.anchor,
    }
}

pub fn catalog(defs: &[IdentityDef], as_json: bool) -> String {
    let entries: Vec<Entry> = defs.iter().map(entry).collect();
    if as_json {
        let mut s = serde_json::to_string_pretty(&entries).expect("catalog serializes");
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    let _ = writeln!(s, "{:<24} {:<24} {:<5} {:<18} {}", "id", "kind", "meta", "constraints", "anchor");
    for e in entries {
        let _ = writeln!(
            s,
            "{:<24} {:<24} {:<5} {:<18} {}",
            e.id,
            e.kind,
            if e.metas.is_empty() { "-".to_string() } else { e.metas },
            if e.constraints.is_empty() { "-" } else { e.constraints },
            e.paper_anchor
        );
    }
    s
}
