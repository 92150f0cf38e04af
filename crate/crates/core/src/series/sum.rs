//! Series definitions and their evaluators.
//!
//! - [`SeriesDef`]: a named template with a default range
//! - [`term`], [`partial_sum`]: direct and summed evaluation, exact or approximate
//! - [`limit_sum`]: nonterminating sums with the adaptive tail stop

use std::sync::Arc;

use super::expr::Env;
use super::template::{relabel, Length, Side, TermTemplate};
use crate::elliptic::{ell_poch, theta};
use crate::error::{QError, QResult};
use crate::scalar_qpoch::{poch, Affine, Meta, MetaVar, Monomial, Scalar};

/// Default summation range of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesRange {
    /// `Σ_{k=0}^{count-1}` with a meta-affine count, e.g. `n`.
    Partial(Affine),
    Infinite,
}

/// A named summand with its default range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDef {
    pub name: String,
    pub template: TermTemplate,
    pub range: SeriesRange,
}

impl SeriesDef {
    pub fn new(name: &str, template: TermTemplate, range: SeriesRange) -> Arc<SeriesDef> {
        Arc::new(SeriesDef { name: name.to_string(), template, range })
    }

    /// The same series divided by `(1 - a)`, which turns the `k = 0` term of the four
    /// quartic series into 1.
    pub fn normalized(&self) -> Arc<SeriesDef> {
        let mut template = self.template.clone();
        template.linear.push(super::template::LinearFactorSpec {
            m: Monomial::lit("a"),
            kcoef: 0,
            side: Side::Den,
            elliptic: false,
        });
        Arc::new(SeriesDef { name: format!("{}/(1-a)", self.name), template, range: self.range })
    }
}

/// Value of a nonterminating sum and the number of terms used.
#[derive(Clone, Debug)]
pub struct LimitSum<S> {
    pub value: S,
    pub terms: usize,
}

/// Terms below the tolerance needed in a row before stopping.
pub const STOP_RUN: usize = 8;
/// Consecutive non-decreasing terms that trigger [`QError::NoDecay`].
pub const NO_DECAY_RUN: usize = 64;
/// Hard cap on the number of terms of a nonterminating sum.
pub const MAX_TERMS: usize = 100_000;

/// The `k`-th term of `s` at the outer meta-integers in `meta`.
pub fn term<S: Scalar>(s: &SeriesDef, k: i64, env: &Env<S>, meta: &Meta) -> QResult<S> {
    s.template.eval(env, &meta.with_k(k))
}

/// `Σ_{k=0}^{count-1} term(k)`.
pub fn partial_sum<S: Scalar>(s: &SeriesDef, count: i64, env: &Env<S>, meta: &Meta) -> QResult<S> {
    if count < 0 {
        return Err(QError::Invalid(format!("negative term count {count} for {}", s.name)));
    }
    let mut acc = S::from_int(0, env.bind.ctx());
    if count == 0 {
        return Ok(acc);
    }
    let mut terms = Terms::new(&s.template, env, meta)?;
    for _ in 0..count {
        acc = acc.add(&terms.next_term()?);
    }
    Ok(acc)
}

/// The infinite sum, extended until `STOP_RUN` consecutive terms are below
/// `eps·max(1, |sum|)` and the geometric tail bound `|t|·r/(1-r)` with the observed ratio
/// `r` is below the same threshold.
pub fn limit_sum<S: Scalar>(s: &SeriesDef, env: &Env<S>, meta: &Meta) -> QResult<LimitSum<S>> {
    if S::EXACT {
        return Err(QError::ExactUnsupported("a nonterminating series"));
    }
    let log_eps = env.eps.log10_abs();
    let mut terms = Terms::new(&s.template, env, meta)?;
    let mut acc = S::from_int(0, env.bind.ctx());
    let mut small_run = 0usize;
    let mut rising_run = 0usize;
    let mut prev_log = f64::INFINITY;
    for count in 1..=MAX_TERMS {
        let t = terms.next_term()?;
        acc = acc.add(&t);
        let lt = t.log10_abs();
        let threshold = log_eps + acc.log10_abs().max(0.0);
        let ratio_log = lt - prev_log;
        let tail_ok = lt == f64::NEG_INFINITY
            || (ratio_log < 0.0 && {
                let r = 10f64.powf(ratio_log);
                lt + (r / (1.0 - r)).log10() < threshold
            });
        if lt < threshold && tail_ok {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if lt != f64::NEG_INFINITY && ratio_log >= 0.0 {
            rising_run += 1;
        } else {
            rising_run = 0;
        }
        if small_run >= STOP_RUN {
            env.note_terms(count);
            return Ok(LimitSum { value: acc, terms: count });
        }
        if rising_run >= NO_DECAY_RUN {
            return Err(QError::NoDecay { terms: count });
        }
        prev_log = lt;
    }
    Err(QError::NoDecay { terms: MAX_TERMS })
}

/// Successive terms `k = 0, 1, 2, …` of a template.
///
/// Shifted factorials whose argument is free of `k` are advanced incrementally with
/// `(x;b)_{L+λ} = (x;b)_L (x b^L; b)_λ`, valid for negative `L` as well. Templates whose
/// arguments depend on `k` fall back to direct evaluation.
pub struct Terms<'a, S: Scalar> {
    tpl: &'a TermTemplate,
    env: &'a Env<S>,
    meta: Meta,
    k: i64,
    state: Option<Incremental<S>>,
    /// Failure while advancing past the last returned term, reported on the next call.
    pending: Option<QError>,
}

struct Incremental<S> {
    scale: S,
    linear: Vec<LinearTrack<S>>,
    pochs: Vec<PochTrack<S>>,
    geo: S,
    geo_pow: S,
}

struct LinearTrack<S> {
    x: S,
    step: S,
    den: bool,
    elliptic: bool,
}

struct PochTrack<S> {
    /// `x b^L` for the current length `L`.
    shifted: S,
    base: S,
    /// `b^λ`.
    step: S,
    lambda: i64,
    value: S,
    den: bool,
    elliptic: bool,
    label: String,
}

impl<'a, S: Scalar> Terms<'a, S> {
    pub fn new(tpl: &'a TermTemplate, env: &'a Env<S>, meta: &Meta) -> QResult<Self> {
        let meta = meta.with_k(0);
        let state = if tpl.k_in_arguments() { None } else { Some(Incremental::new(tpl, env, &meta)?) };
        Ok(Terms { tpl, env, meta, k: 0, state, pending: None })
    }

    /// Returns the current term and advances `k`.
    pub fn next_term(&mut self) -> QResult<S> {
        if let Some(e) = self.pending.take() {
            return Err(e);
        }
        let meta = self.meta.with_k(self.k);
        let out = match &mut self.state {
            None => self.tpl.eval(self.env, &meta),
            Some(st) => {
                let v = st.value(self.tpl, self.env, &meta);
                if v.is_ok() {
                    self.pending = st.advance(self.tpl, self.env).err();
                }
                v
            }
        };
        self.k += 1;
        out
    }
}

impl<S: Scalar> Incremental<S> {
    fn new(tpl: &TermTemplate, env: &Env<S>, meta: &Meta) -> QResult<Self> {
        let q = Monomial::lit("q");
        let mut linear = Vec::new();
        for l in &tpl.linear {
            linear.push(LinearTrack {
                x: l.m.eval(&env.bind, meta)?,
                step: q.eval(&env.bind, meta)?.powi(l.kcoef)?,
                den: l.side == Side::Den,
                elliptic: l.elliptic,
            });
        }
        let mut pochs = Vec::new();
        for f in &tpl.poch_factors {
            let x = f.arg.eval(&env.bind, meta)?;
            let base = f.base(env, meta)?;
            let (value, shifted, lambda) = match f.len {
                Length::Infinite => (f.value(env, meta)?, x.zero_like(), 0),
                Length::Finite(len) => {
                    let lambda = len.coef(MetaVar::K);
                    let l0 = len.eval(meta);
                    let value = f.value(env, meta).map_err(|e| relabel(e, f))?;
                    (value, x.mul(&base.powi(l0)?), lambda)
                }
            };
            let step = base.powi(lambda)?;
            pochs.push(PochTrack {
                shifted,
                base,
                step,
                lambda,
                value,
                den: f.side == Side::Den,
                elliptic: f.elliptic,
                label: f.to_string(),
            });
        }
        let g = &tpl.geometric;
        let mut geo = g.base.eval(&env.bind, meta)?;
        if g.sign < 0 {
            geo = geo.neg();
        }
        Ok(Incremental { scale: tpl.scale.eval(&env.bind, meta)?, linear, pochs, geo_pow: geo.one_like(), geo })
    }

    fn value(&self, tpl: &TermTemplate, env: &Env<S>, meta: &Meta) -> QResult<S> {
        let mut num = self.scale.clone();
        let mut den = num.one_like();
        for (l, spec) in self.linear.iter().zip(&tpl.linear) {
            let v = if l.elliptic { theta(&l.x, env.nome()?, &env.eps)? } else { l.x.one_minus() };
            if l.den {
                if v.is_zero() {
                    return Err(QError::Pole(spec.to_string()));
                }
                den = den.mul(&v);
            } else {
                num = num.mul(&v);
            }
        }
        for p in &self.pochs {
            if p.den {
                if p.value.is_zero() {
                    return Err(QError::Pole(p.label.clone()));
                }
                den = den.mul(&p.value);
            } else {
                num = num.mul(&p.value);
            }
        }
        let g = &tpl.geometric;
        if !g.is_trivial() {
            let quad = Monomial::q_half_power(g.quad_exp2(meta.k)).eval(&env.bind, meta)?;
            num = num.mul(&self.geo_pow).mul(&quad);
        }
        num.div(&den)
    }

    fn advance(&mut self, tpl: &TermTemplate, env: &Env<S>) -> QResult<()> {
        for l in &mut self.linear {
            l.x = l.x.mul(&l.step);
        }
        for p in &mut self.pochs {
            if p.lambda == 0 {
                continue;
            }
            let ext = if p.elliptic {
                ell_poch(&p.shifted, &p.base, env.nome()?, p.lambda, &env.eps)?
            } else {
                poch(&p.shifted, &p.base, p.lambda)?
            };
            p.value = p.value.mul(&ext);
            p.shifted = p.shifted.mul(&p.step);
        }
        if !tpl.geometric.is_trivial() {
            self.geo_pow = self.geo_pow.mul(&self.geo);
        }
        Ok(())
    }
}
