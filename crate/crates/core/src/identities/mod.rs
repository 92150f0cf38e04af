//! The identity registry, verification drivers and randomized sweeps.
//!
//! - [`IdentityDef`]: one identity as a pair of expression trees with its metas and constraints
//! - [`registry`], [`fixture_registry`], [`find`]: the catalog and the known-wrong fixtures
//! - [`verify_exact`], [`verify_numeric`], [`verify_elliptic`]: single verifications
//! - [`sweep`]: deterministic randomized sweeps producing [`Report`]s
//! - [`recurrence`]: single-step recurrences and their programmatic composition

pub mod recurrence;
mod registry;
mod sweep;

use serde::Serialize;

use crate::abel::agree;
use crate::error::{QError, QResult};
use crate::scalar_qpoch::{ApproxBinding, ApproxScalar, ExactBinding, ExactScalar, Meta, MetaVar, Scalar, Subst, Symbol};
use crate::series::{Env, Expr};

pub use recurrence::{compose, families, RecurrenceFamily};
pub use registry::{fixture_registry, registry};
pub use sweep::{sweep, sweep_many, Mode, Record, Report, Status, Summary, SweepConfig, SCHEMA_VERSION};

/// How an identity is verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    TerminatingExact,
    NonterminatingNumeric,
    EllipticNumeric,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::TerminatingExact => "terminating_exact",
            Kind::NonterminatingNumeric => "nonterminating_numeric",
            Kind::EllipticNumeric => "elliptic_numeric",
        }
    }
}

/// One verifiable identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct IdentityDef {
    pub id: String,
    pub kind: Kind,
    /// Meta-integers the identity takes, among `n`, `m`, `δ`.
    pub metas: Vec<MetaVar>,
    /// Parameters sampled independently, `q` included.
    pub free: Vec<Symbol>,
    /// Constrained parameters, derived from the free ones before evaluation.
    pub derive: Subst,
    /// The derivation rule as text, empty when there is none.
    pub constraints: String,
    /// Short description of the display the identity transcribes.
    pub anchor: &'static str,
    /// Smallest admissible value of the first meta-integer.
    pub min_meta: i64,
    pub lhs: Expr,
    pub rhs: Expr,
    /// An independent form of `lhs` (e.g. the raw series rather than a normalized one).
    pub alt_lhs: Option<Expr>,
    /// Known-wrong variant kept to exercise mismatch reporting.
    pub fixture: bool,
}

impl IdentityDef {
    pub fn takes(&self, v: MetaVar) -> bool {
        self.metas.contains(&v)
    }

    /// Applies the constraint derivation to `bind`.
    pub fn derive_binding<S: Scalar>(
        &self,
        bind: &crate::scalar_qpoch::ParameterBinding<S>,
        meta: &Meta,
    ) -> QResult<crate::scalar_qpoch::ParameterBinding<S>> {
        if self.derive.is_identity() {
            Ok(bind.clone())
        } else {
            bind.substituted(&self.derive, meta)
        }
    }

    /// Both sides at `meta` over the free parameters in `env`.
    pub fn evaluate<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<(S, S)> {
        let e = env.rebind(self.derive_binding(&env.bind, meta)?);
        Ok((self.lhs.eval(&e, meta)?, self.rhs.eval(&e, meta)?))
    }
}

/// Looks up an identity; fixtures are searched only when asked for.
pub fn find(id: &str, include_fixtures: bool) -> QResult<&'static IdentityDef> {
    let fixtures: &'static [IdentityDef] = if include_fixtures { fixture_registry() } else { &[] };
    registry()
        .iter()
        .chain(fixtures)
        .find(|d| d.id == id)
        .ok_or_else(|| QError::Invalid(format!("unknown identity {id}")))
}

/// Both sides of one verification and the verdict.
#[derive(Clone, Debug)]
pub struct Outcome<S> {
    pub lhs: S,
    pub rhs: S,
    /// `lhs - rhs` in exact mode, `|lhs - rhs|` otherwise.
    pub residual: S,
    pub pass: bool,
}

/// Exact check: passes iff `lhs - rhs` is exactly zero.
pub fn verify_exact(def: &IdentityDef, bind: &ExactBinding, meta: &Meta) -> QResult<Outcome<ExactScalar>> {
    let mut env = Env::exact(bind.clone());
    if def.kind == Kind::EllipticNumeric {
        env = env.with_nome(ExactScalar::from_int(0, ()));
    }
    let (lhs, rhs) = def.evaluate(&env, meta)?;
    let residual = lhs.sub(&rhs);
    Ok(Outcome { pass: residual.is_zero(), lhs, rhs, residual })
}

fn tail_eps(eps: &ApproxScalar) -> ApproxScalar {
    eps.mul(&ApproxScalar::parse("1e-12", eps.digits()).expect("literal"))
}

/// Numeric check: passes iff `|lhs - rhs| <= eps·max(1, |lhs|)`.
pub fn verify_numeric(
    def: &IdentityDef,
    bind: &ApproxBinding,
    meta: &Meta,
    eps: &ApproxScalar,
) -> QResult<Outcome<ApproxScalar>> {
    let env = Env::new(bind.clone(), tail_eps(eps));
    let (lhs, rhs) = def.evaluate(&env, meta)?;
    let residual = lhs.sub(&rhs).abs();
    Ok(Outcome { pass: agree(&lhs, &rhs, eps), lhs, rhs, residual })
}

/// Elliptic check at nome `p`: passes iff `|lhs - rhs| <= eps·max(1, |lhs|, |rhs|)`.
pub fn verify_elliptic(
    def: &IdentityDef,
    bind: &ApproxBinding,
    p: &ApproxScalar,
    meta: &Meta,
    eps: &ApproxScalar,
) -> QResult<Outcome<ApproxScalar>> {
    let env = Env::new(bind.clone(), tail_eps(eps)).with_nome(p.clone());
    let (lhs, rhs) = def.evaluate(&env, meta)?;
    let residual = lhs.sub(&rhs).abs();
    let big = if lhs.abs_le(&rhs) { rhs.abs() } else { lhs.abs() };
    let one = big.one_like();
    let scale = if one.abs_le(&big) { big } else { one };
    Ok(Outcome { pass: residual.abs_le(&eps.mul(&scale)), lhs, rhs, residual })
}
