//! Evaluation and verification engine for quartic basic hypergeometric sums.
//!
//! Layers, bottom up:
//! - [`scalar_qpoch`]: exact rationals, big floats, monomials, q-shifted factorials
//! - [`series`]: declarative term templates and the built-in series catalog
//! - [`abel`]: the modified Abel lemma and the six difference pairs
//! - [`identities`]: the identity registry, verification drivers and sweep reports
//! - [`elliptic`]: theta functions and elliptic shifted factorials

pub mod abel;
pub mod elliptic;
pub mod error;
pub mod identities;
pub mod scalar_qpoch;
pub mod series;

pub use elliptic::{ell_poch, theta};
pub use error::{QError, QResult};
pub use identities::{find, registry, sweep, sweep_many, IdentityDef, Kind, Mode, Report, SweepConfig};
pub use scalar_qpoch::{
    poch, poch_inf, ApproxBinding, ApproxScalar, ExactBinding, ExactScalar, Meta, MetaVar, Monomial,
    ParameterBinding, Scalar, Subst, Symbol,
};
pub use series::{builtin, limit_sum, partial_sum, term, Env, Expr, SeriesDef, TermTemplate};
