//! Deterministic randomized sweeps over bindings and meta-integers.
//!
//! - [`SweepConfig`]: trials, seed, meta ranges, precision and tolerances
//! - [`sweep`], [`sweep_many`]: run every `(trial, n, m, δ)` instance, resampling on poles
//! - [`Report`], [`Record`], [`Summary`]: the serializable aggregate

use std::collections::BTreeMap;
use std::time::Instant;

use dashu::rational::RBig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{verify_elliptic, verify_exact, verify_numeric, IdentityDef, Kind, Outcome};
use crate::error::{QError, QResult};
use crate::scalar_qpoch::{ApproxBinding, ApproxScalar, ExactBinding, Meta, MetaVar, Scalar, Symbol};

pub const SCHEMA_VERSION: u32 = 1;

/// Evaluation mode of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Numeric,
    Elliptic,
    /// The identity's declared kind.
    Auto,
}

impl Mode {
    /// The concrete mode for `def`, or an error when the combination makes no sense.
    pub fn resolve(self, def: &IdentityDef, p_is_zero: bool) -> QResult<Mode> {
        let m = match (self, def.kind) {
            (Mode::Auto, Kind::TerminatingExact) => Mode::Exact,
            (Mode::Auto, Kind::NonterminatingNumeric) => Mode::Numeric,
            (Mode::Auto, Kind::EllipticNumeric) => Mode::Elliptic,
            (m, _) => m,
        };
        let ok = match (m, def.kind) {
            (Mode::Exact, Kind::NonterminatingNumeric) => false,
            (Mode::Exact, Kind::EllipticNumeric) => p_is_zero,
            (Mode::Elliptic, k) => k == Kind::EllipticNumeric,
            (Mode::Numeric, k) => k != Kind::EllipticNumeric,
            _ => true,
        };
        if ok {
            Ok(m)
        } else {
            Err(QError::Invalid(format!("{} cannot be verified in {:?} mode", def.id, m).to_lowercase()))
        }
    }
}

/// Parameters of a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepConfig {
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub nmax: i64,
    pub mmax: i64,
    /// Fixed `δ`; both `0` and `1` when absent.
    pub delta: Option<i64>,
    /// Decimal digits for numeric and elliptic modes.
    pub precision: u32,
    /// Relative tolerance, as a decimal literal.
    pub eps: String,
    /// Elliptic nome, as a decimal literal.
    pub p: String,
    /// Record wall-clock time per verification (breaks byte-for-byte reproducibility).
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            mode: Mode::Auto,
            trials: 3,
            seed: 1,
            nmax: 4,
            mmax: 4,
            delta: None,
            precision: 60,
            eps: "1e-30".into(),
            p: "0.05".into(),
            timing: false,
        }
    }
}

/// Outcome class of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NoDecay,
    /// Every sampled binding within the retry budget hit a pole.
    PoleExhausted,
}

/// One verification.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub paper_anchor: String,
    pub mode: Mode,
    pub trial: usize,
    /// Square-root seeds (exact mode) or values (numeric modes) of the free parameters.
    pub binding: BTreeMap<String, String>,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub delta: Option<i64>,
    pub status: Status,
    /// Exact `lhs - rhs`, or `|lhs - rhs|` in scientific notation.
    pub residual: String,
    pub poles_resampled: usize,
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Counts over a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub no_decay: usize,
    pub pole_exhausted: usize,
    /// Total number of bindings discarded on poles.
    pub resampled: usize,
}

impl Summary {
    fn add(&mut self, r: &Record) {
        match r.status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::NoDecay => self.no_decay += 1,
            Status::PoleExhausted => self.pole_exhausted += 1,
        }
        self.resampled += r.poles_resampled;
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0 && self.no_decay == 0 && self.pole_exhausted == 0 && self.pass > 0
    }
}

/// The aggregate of one or more sweeps.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub artifact_version: String,
    pub config: SweepConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
}

const RETRIES: usize = 50;

/// The meta points of `def` under `cfg`, ordered by `n`, then `m`, then `δ`.
fn meta_points(def: &IdentityDef, cfg: &SweepConfig) -> Vec<Meta> {
    let range = |v: MetaVar, max: i64| -> Vec<Option<i64>> {
        if !def.takes(v) {
            return vec![None];
        }
        let lo = if def.metas.first() == Some(&v) { def.min_meta } else { 0 };
        (lo..=max).map(Some).collect()
    };
    let deltas: Vec<Option<i64>> = if def.takes(MetaVar::Delta) {
        cfg.delta.map(|d| vec![Some(d)]).unwrap_or_else(|| vec![Some(0), Some(1)])
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for n in range(MetaVar::N, cfg.nmax) {
        for m in range(MetaVar::M, cfg.mmax) {
            for d in &deltas {
                out.push(Meta::new(n.unwrap_or(0), m.unwrap_or(0)).with(MetaVar::Delta, d.unwrap_or(0)));
            }
        }
    }
    out
}

/// Draws an exact binding: seeds `p/r` with `1 ≤ p, r ≤ 40`, `q`'s seed `≠ 1`.
fn draw_exact(rng: &mut ChaCha8Rng, free: &[Symbol]) -> (ExactBinding, BTreeMap<String, String>) {
    let mut seeds = Vec::new();
    for &s in free {
        let r = loop {
            let num: i64 = rng.gen_range(1..=40);
            let den: u64 = rng.gen_range(1..=40);
            if s != Symbol::Q || num as u64 != den {
                break RBig::from_parts(num.into(), den.into());
            }
        };
        seeds.push((s, r));
    }
    let shown = seeds.iter().map(|(s, r)| (s.letter().to_string(), r.to_string())).collect();
    (ExactBinding::from_seeds((), &seeds), shown)
}

/// Draws a float binding: `q ∈ [0.2, 0.7]`, others in `[0.1, 0.9]`, on a grid of `1e-4`.
fn draw_numeric(rng: &mut ChaCha8Rng, free: &[Symbol], digits: u32) -> (ApproxBinding, BTreeMap<String, String>) {
    let mut values = Vec::new();
    for &s in free {
        let (lo, hi) = if s == Symbol::Q { (2000, 7000) } else { (1000, 9000) };
        let k: i64 = rng.gen_range(lo..=hi);
        values.push((s, RBig::from_parts(k.into(), 10000u32.into())));
    }
    let shown = values.iter().map(|(s, r)| (s.letter().to_string(), format!("{:.4}", r.to_f64().value()))).collect();
    (ApproxBinding::from_values(digits, &values), shown)
}

struct Task<'a> {
    def: &'a IdentityDef,
    mode: Mode,
    trial: usize,
    meta: Meta,
}

fn outcome_fields<S: Scalar>(o: &Outcome<S>, exact: bool, digits: usize) -> (Status, String, Option<String>, Option<String>) {
    let show = |x: &S| if exact { x.to_string() } else { x.to_sci(digits) };
    if o.pass {
        let residual = if exact { "0".to_string() } else { o.residual.to_sci(digits) };
        (Status::Pass, residual, None, None)
    } else {
        (Status::Fail, show(&o.residual), Some(show(&o.lhs)), Some(show(&o.rhs)))
    }
}

fn run_task(t: &Task, cfg: &SweepConfig, eps: &ApproxScalar, p: &ApproxScalar) -> Record {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(t.trial as u64);
    let digits = cfg.precision as usize;
    let mut poles = 0;
    let mut result: Option<(BTreeMap<String, String>, Status, String, Option<String>, Option<String>, Option<String>)> =
        None;
    for _ in 0..RETRIES {
        let attempt = match t.mode {
            Mode::Exact => {
                let (b, shown) = draw_exact(&mut rng, &t.def.free);
                (shown, verify_exact(t.def, &b, &t.meta).map(|o| outcome_fields(&o, true, digits)))
            }
            _ => {
                let (b, shown) = draw_numeric(&mut rng, &t.def.free, cfg.precision);
                let o = if t.mode == Mode::Elliptic {
                    verify_elliptic(t.def, &b, p, &t.meta, eps)
                } else {
                    verify_numeric(t.def, &b, &t.meta, eps)
                };
                (shown, o.map(|o| outcome_fields(&o, false, digits)))
            }
        };
        match attempt {
            (_, Err(e)) if e.is_pole() => poles += 1,
            (shown, Err(QError::NoDecay { terms })) => {
                result = Some((shown, Status::NoDecay, String::new(), None, None, Some(format!("no decay after {terms} terms"))));
                break;
            }
            (shown, Err(e)) => {
                result = Some((shown, Status::Fail, String::new(), None, None, Some(e.to_string())));
                break;
            }
            (shown, Ok((status, residual, lhs, rhs))) => {
                result = Some((shown, status, residual, lhs, rhs, None));
                break;
            }
        }
    }
    let (binding, status, residual, lhs, rhs, detail) = result.unwrap_or_else(|| {
        (BTreeMap::new(), Status::PoleExhausted, String::new(), None, None, Some(format!("{RETRIES} bindings hit poles")))
    });
    Record {
        id: t.def.id.clone(),
        paper_anchor: t.def.anchor.to_string(),
        mode: t.mode,
        trial: t.trial,
        binding,
        n: t.def.takes(MetaVar::N).then_some(t.meta.n),
        m: t.def.takes(MetaVar::M).then_some(t.meta.m),
        delta: t.def.takes(MetaVar::Delta).then_some(t.meta.delta),
        status,
        residual,
        poles_resampled: poles,
        elapsed_ms: cfg.timing.then(|| start.elapsed().as_millis() as u64),
        lhs,
        rhs,
        detail,
    }
}

fn check_config(cfg: &SweepConfig) -> QResult<(ApproxScalar, ApproxScalar)> {
    if cfg.trials == 0 {
        return Err(QError::Invalid("trials must be at least 1".into()));
    }
    if cfg.precision < crate::scalar_qpoch::MIN_DIGITS {
        return Err(QError::PrecisionTooLow(cfg.precision));
    }
    let eps = ApproxScalar::parse(&cfg.eps, cfg.precision)?;
    if eps.is_negative() || eps.is_zero() {
        return Err(QError::Invalid(format!("eps must be positive, got {}", cfg.eps)));
    }
    if (cfg.precision as f64) < -2.0 * eps.log10_abs() - 1e-9 {
        return Err(QError::Invalid(format!("precision {} is below twice the digits of eps {}", cfg.precision, cfg.eps)));
    }
    let p = ApproxScalar::parse(&cfg.p, cfg.precision)?;
    if p.is_negative() || !p.abs_le(&ApproxScalar::parse("0.99", cfg.precision)?) {
        return Err(QError::Invalid(format!("nome must lie in [0, 1), got {}", cfg.p)));
    }
    Ok((eps, p))
}

/// Sweeps several identities into one report, in the given order, then by trial, `n`, `m`, `δ`.
pub fn sweep_many(defs: &[&IdentityDef], cfg: &SweepConfig) -> QResult<Report> {
    let (eps, p) = check_config(cfg)?;
    let mut tasks = Vec::new();
    for def in defs {
        let mode = cfg.mode.resolve(def, p.is_zero())?;
        for trial in 0..cfg.trials {
            for meta in meta_points(def, cfg) {
                tasks.push(Task { def, mode, trial, meta });
            }
        }
    }
    let records: Vec<Record> = tasks.par_iter().map(|t| run_task(t, cfg, &eps, &p)).collect();
    let mut summary = Summary::default();
    records.iter().for_each(|r| summary.add(r));
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        artifact_version: env!("CARGO_PKG_VERSION").to_string(),
        config: cfg.clone(),
        records,
        summary,
    })
}

/// Sweeps one identity.
pub fn sweep(def: &IdentityDef, cfg: &SweepConfig) -> QResult<Report> {
    sweep_many(&[def], cfg)
}
