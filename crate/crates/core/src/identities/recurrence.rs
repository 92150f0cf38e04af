//! Single-step recurrences and their composition.
//!
//! Each family writes one step as `S(a) = S(σa)·ρ(a) + τ(a)`, where `σ` is a parameter shift.
//! Composing `m` steps gives `S(a) = S(σ^m a)·∏_{j<m} ρ(σ^j a) + Σ_{j<m} ∏_{i<j} ρ(σ^i a)·τ(σ^j a)`,
//! which must agree with the closed m-step display.

use std::sync::{Arc, OnceLock};

use crate::abel::pair;
use crate::error::QResult;
use crate::scalar_qpoch::{Meta, Scalar, Subst};
use crate::series::{builtin, ratio, Count, Env, Expr, SeriesDef};

/// One recurrence with its m-step counterpart.
#[derive(Clone, Debug)]
pub struct RecurrenceFamily {
    pub rec_id: &'static str,
    pub iter_id: &'static str,
    pub series: Arc<SeriesDef>,
    pub step: Subst,
    pub rho: Expr,
    pub tau: Expr,
}

impl RecurrenceFamily {
    /// `S(σa)·ρ + τ` at the current meta.
    pub fn step_rhs(&self) -> Expr {
        Expr::Series { def: self.series.clone(), count: Count::Default, subst: self.step.clone() } * self.rho.clone()
            + self.tau.clone()
    }
}

fn r_of(name: &str) -> Expr {
    Expr::term(pair(name).expect("pair name").r_closed.clone())
}

fn build() -> Vec<RecurrenceFamily> {
    let u = builtin("U").expect("catalog name");
    let v = builtin("V").expect("catalog name");
    vec![
        RecurrenceFamily {
            rec_id: "rec-u-q3",
            iter_id: "iter-u-q3",
            series: u.clone(),
            step: Subst::lit("a=q^3a"),
            rho: ratio(
                "(q^2a/bd;q)_3 (1-q^3a^2/bd) (1-q^9a^2/b^2d^3) (1-q^9a^2/b^3d^2)",
                "(q^5a^2/b^2d^2;q^2)_3 (1-q^3a/b) (1-q^3a/d) (1-q^6a/b^2d^2)",
            ),
            tau: -(Expr::one() - r_of("u_quad"))
                * ratio(
                    "a (1-q^2/bd) (1-q^4/bd) (1-q^3a/bd) (1-q^9a^3/b^3d^3)",
                    "(1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-q^6a/b^2d^2)",
                ),
        },
        RecurrenceFamily {
            rec_id: "rec-u-q4",
            iter_id: "iter-u-q4",
            series: u.clone(),
            step: Subst::lit("a=q^4a, b=q^4b, d=d/q^2"),
            rho: ratio(
                "(b;q^2)_2 (q^2a/bd;q)_2 (1-q^3a^2/bd) (1-q^9a^2/b^2d^3)",
                "(q^5a^2/b^2d^2;q^2)_2 (q^3a/d;q^3)_2 (1-q^2/d) (1-bd)",
            ),
            tau: (Expr::one() - r_of("u_cubic"))
                * ratio(
                    "(1-bd/q^2) (1-q^5a^2/bd^2) (1-a/b) (1-q^3a/bd)",
                    "(1-d/q^2) (1-q^3a/d) (1-q^5a^2/b^2d^2)",
                ),
        },
        RecurrenceFamily {
            rec_id: "rec-u-q1",
            iter_id: "iter-u-q1",
            series: u,
            step: Subst::lit("a=qa, b=q^4b, d=d/q^2"),
            rho: -ratio(
                "q^2a/bd (b;q^2)_2 (1-b^2d^2/q^3a) (1-b^2d^2/q^3a^2) (1-b/a)",
                "(1-bd) (1-q^2/d) (1-bd/qa) (1-q^3a/d) (1-b^3d^2/q^3a^2)",
            ),
            tau: (Expr::one() - r_of("u_quartic"))
                * ratio(
                    "(1-a/b) (1-bd/q^2) (1-b^2d/qa) (1-b^2d^2/q^3a^2)",
                    "(1-d/q^2) (1-bd/qa) (1-b^3d^2/q^3a^2)",
                ),
        },
        RecurrenceFamily {
            rec_id: "rec-v-q3",
            iter_id: "iter-v-q3",
            series: v.clone(),
            step: Subst::lit("a=q^3a, c=q^3c, e=q^3e"),
            rho: ratio(
                "(1-qc) (1-qe) (1-qc^2e^2/a^3) (qc^2e^2/a^2;q^2)_3",
                "(1-q^5ce) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3) (qce/a;q)_3",
            ),
            tau: -(Expr::one() - r_of("v_quad"))
                * ratio(
                    "a (1-qc/a) (1-qe/a) (1-qc^2e^2/a^3) (1-q^3c^3e^3/a^3)",
                    "(1-q^2ce/a) (1-q^2c^3e^2/a^3) (1-q^2c^2e^3/a^3)",
                ),
        },
        RecurrenceFamily {
            rec_id: "rec-v-q4",
            iter_id: "iter-v-q4",
            series: v.clone(),
            step: Subst::lit("a=q^4a, c=q^6c"),
            rho: ratio(
                "(qc;q^3)_2 (qc^2e^2/a^2;q^2)_2 (1-qc/a) (1-a^2/ce)",
                "(qce/a;q)_2 (qa/e;q^2)_2 (1-q^5ce) (1-q^2c^3e^2/a^3)",
            ),
            tau: (Expr::one() - r_of("v_cubic"))
                * ratio(
                    "(1-ce/a) (1-qc/a) (1-a^3/qc^2e^2) (1-q^2c^2e/a)",
                    "(1-a/qce) (1-qa/e) (1-q^2c^3e^2/a^3)",
                ),
        },
        RecurrenceFamily {
            rec_id: "rec-v-q1",
            iter_id: "iter-v-q1",
            series: v,
            step: Subst::lit("a=qa, c=q^3c, e=e/q^3"),
            rho: -ratio(
                "(1-qc) (1-qc/a) (1-a/ce) (1-a^2/ce) (1-q^4a^3/c^2e^3)",
                "ce/qa (1-q^2a^3/c^2e^2) (1-qa^2/c^2e^2) (1-q^2/e) (qa/e;q^2)_2",
            ),
            tau: (r_of("v_quartic") - Expr::one())
                * ratio(
                    "a (1-a/ce) (1-q^2a^2/ce^2) (1-qc/a) (1-q/ce)",
                    "(1-qa^2/c^2e^2) (1-q^2/e) (1-qa/e)",
                ),
        },
    ]
}

/// The six recurrence families.
pub fn families() -> &'static [RecurrenceFamily] {
    static FAMILIES: OnceLock<Vec<RecurrenceFamily>> = OnceLock::new();
    FAMILIES.get_or_init(build)
}

/// Evaluates the `m`-fold composition of the single step at `n`.
pub fn compose<S: Scalar>(fam: &RecurrenceFamily, env: &Env<S>, n: i64, m: i64) -> QResult<S> {
    let meta = Meta::new(n, 0);
    let mut bind = env.bind.clone();
    let mut prod = S::from_int(1, env.bind.ctx());
    let mut acc = prod.zero_like();
    for _ in 0..m {
        let e = env.rebind(bind.clone());
        acc = acc.add(&prod.mul(&fam.tau.eval(&e, &meta)?));
        prod = prod.mul(&fam.rho.eval(&e, &meta)?);
        bind = bind.substituted(&fam.step, &meta)?;
    }
    let last = Expr::Series { def: fam.series.clone(), count: Count::Default, subst: Subst::identity() };
    Ok(acc.add(&prod.mul(&last.eval(&env.rebind(bind), &meta)?)))
}
