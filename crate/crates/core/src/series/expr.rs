//! Expression trees over series, products and scalars, and their evaluation environment.
//!
//! - [`Env`]: binding, tail tolerance and optional elliptic nome
//! - [`Expr`]: sums, shifted series, products and arithmetic, evaluated at meta-integers
//! - [`Count`]: how many terms a series node takes

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use dashu::rational::RBig;

use super::notation::tpl;
use super::sum::{limit_sum, partial_sum, SeriesDef, SeriesRange};
use super::template::TermTemplate;
use crate::error::{QError, QResult};
use crate::scalar_qpoch::{Affine, Meta, MetaVar, Monomial, ParameterBinding, Scalar, Subst};

/// Everything an expression needs besides the meta-integers.
#[derive(Debug)]
pub struct Env<S: Scalar> {
    pub bind: ParameterBinding<S>,
    /// Relative tolerance for infinite products and nonterminating sums.
    pub eps: S,
    /// Elliptic nome `p`, required only by elliptic factors.
    pub nome: Option<S>,
    max_terms: Cell<usize>,
}

impl<S: Scalar> Env<S> {
    pub fn new(bind: ParameterBinding<S>, eps: S) -> Self {
        Env { bind, eps, nome: None, max_terms: Cell::new(0) }
    }

    /// An environment for exact evaluation; infinite objects are refused there anyway.
    pub fn exact(bind: ParameterBinding<S>) -> Self {
        let eps = S::from_rational(&RBig::from_parts(1.into(), dashu::integer::UBig::from(10u8).pow(30)), bind.ctx());
        Env::new(bind, eps)
    }

    pub fn with_nome(mut self, p: S) -> Self {
        self.nome = Some(p);
        self
    }

    pub fn nome(&self) -> QResult<&S> {
        self.nome.as_ref().ok_or_else(|| QError::Invalid("elliptic factor without a nome".into()))
    }

    /// The same tolerances over another binding.
    pub fn rebind(&self, bind: ParameterBinding<S>) -> Self {
        Env { bind, eps: self.eps.clone(), nome: self.nome.clone(), max_terms: Cell::new(0) }
    }

    pub(crate) fn note_terms(&self, n: usize) {
        self.max_terms.set(self.max_terms.get().max(n));
    }

    /// Largest number of terms any nonterminating sum used so far.
    pub fn max_terms(&self) -> usize {
        self.max_terms.get()
    }
}

/// Number of terms taken by a [`Expr::Series`] node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Terms(Affine),
    Infinite,
    /// The series' own default range.
    Default,
}

/// An evaluable expression.
#[derive(Clone, Debug)]
pub enum Expr {
    Const(RBig),
    Mono(Monomial),
    /// A term template evaluated at the current meta-integers, `k` included.
    Term(Arc<TermTemplate>),
    /// A series over the parameters rewritten by `subst`.
    Series { def: Arc<SeriesDef>, count: Count, subst: Subst },
    /// `body` over the parameters rewritten by `subst`, images taken at the current meta.
    Shift { subst: Subst, body: Box<Expr> },
    /// `Σ_{k=0}^{count-1} body`.
    Sum { count: Affine, body: Box<Expr> },
    /// `(-1)^{e}`.
    SignPow(Affine),
    /// `q^{(α v² + β v + γ)/2}`.
    QQuad { var: MetaVar, quad: (i64, i64, i64) },
    /// `even` with `half_as := var/2` when `var` is even, `odd` otherwise.
    EvenSplit { var: MetaVar, half_as: MetaVar, even: Box<Expr>, odd: Box<Expr> },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

impl Expr {
    pub fn int(i: i64) -> Expr {
        Expr::Const(RBig::from(i))
    }

    pub fn one() -> Expr {
        Expr::int(1)
    }

    pub fn zero() -> Expr {
        Expr::int(0)
    }

    pub fn mono(s: &str) -> Expr {
        Expr::Mono(Monomial::lit(s))
    }

    pub fn term(t: TermTemplate) -> Expr {
        Expr::Term(Arc::new(t))
    }

    pub fn series(def: Arc<SeriesDef>, count: Count, subst: &str) -> Expr {
        Expr::Series { def, count, subst: Subst::lit(subst) }
    }

    pub fn shift(subst: &str, body: Expr) -> Expr {
        Expr::Shift { subst: Subst::lit(subst), body: Box::new(body) }
    }

    pub fn sum_k(count: &str, body: Expr) -> Expr {
        Expr::Sum { count: Affine::lit(count), body: Box::new(body) }
    }

    pub fn sign_pow(e: &str) -> Expr {
        Expr::SignPow(Affine::lit(e))
    }

    pub fn q_quad(var: MetaVar, quad: (i64, i64, i64)) -> Expr {
        Expr::QQuad { var, quad }
    }

    pub fn even_split(var: MetaVar, half_as: MetaVar, even: Expr, odd: Expr) -> Expr {
        Expr::EvenSplit { var, half_as, even: Box::new(even), odd: Box::new(odd) }
    }

    /// Evaluates at `meta`.
    pub fn eval<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<S> {
        let ctx = env.bind.ctx();
        match self {
            Expr::Const(r) => Ok(S::from_rational(r, ctx)),
            Expr::Mono(m) => m.eval(&env.bind, meta),
            Expr::Term(t) => t.eval(env, meta),
            Expr::Series { def, count, subst } => {
                let shifted = if subst.is_identity() { None } else { Some(env.rebind(env.bind.substituted(subst, meta)?)) };
                let e = shifted.as_ref().unwrap_or(env);
                let out = match (*count, def.range) {
                    (Count::Terms(c), _) | (Count::Default, SeriesRange::Partial(c)) => {
                        partial_sum(def, c.eval(meta), e, meta)
                    }
                    (Count::Infinite, _) | (Count::Default, SeriesRange::Infinite) => {
                        limit_sum(def, e, meta).map(|l| l.value)
                    }
                };
                env.note_terms(e.max_terms());
                out
            }
            Expr::Shift { subst, body } => {
                let e = env.rebind(env.bind.substituted(subst, meta)?);
                let out = body.eval(&e, meta);
                env.note_terms(e.max_terms());
                out
            }
            Expr::Sum { count, body } => {
                let mut acc = S::from_int(0, ctx);
                for k in 0..count.eval(meta) {
                    acc = acc.add(&body.eval(env, &meta.with_k(k))?);
                }
                Ok(acc)
            }
            Expr::SignPow(e) => Ok(S::from_int(if e.eval(meta) % 2 == 0 { 1 } else { -1 }, ctx)),
            Expr::QQuad { var, quad } => {
                let v = meta.get(*var);
                Monomial::q_half_power(quad.0 * v * v + quad.1 * v + quad.2).eval(&env.bind, meta)
            }
            Expr::EvenSplit { var, half_as, even, odd } => {
                let v = meta.get(*var);
                if v % 2 == 0 {
                    even.eval(env, &meta.with(*half_as, v / 2))
                } else {
                    odd.eval(env, meta)
                }
            }
            Expr::Add(a, b) => Ok(a.eval(env, meta)?.add(&b.eval(env, meta)?)),
            Expr::Sub(a, b) => Ok(a.eval(env, meta)?.sub(&b.eval(env, meta)?)),
            Expr::Mul(a, b) => Ok(a.eval(env, meta)?.mul(&b.eval(env, meta)?)),
            Expr::Div(a, b) => {
                let d = b.eval(env, meta)?;
                if d.is_zero() {
                    return Err(QError::Pole(b.to_string()));
                }
                a.eval(env, meta)?.div(&d)
            }
            Expr::Neg(a) => Ok(a.eval(env, meta)?.neg()),
        }
    }

    /// The same tree with every elliptic factor replaced by its `p = 0` counterpart.
    pub fn to_basic(&self) -> Expr {
        let map = |e: &Expr| Box::new(e.to_basic());
        match self {
            Expr::Term(t) => Expr::Term(Arc::new(t.to_basic())),
            Expr::Series { def, count, subst } => Expr::Series {
                def: Arc::new(SeriesDef { name: def.name.clone(), template: def.template.to_basic(), range: def.range }),
                count: *count,
                subst: subst.clone(),
            },
            Expr::Shift { subst, body } => Expr::Shift { subst: subst.clone(), body: map(body) },
            Expr::Sum { count, body } => Expr::Sum { count: *count, body: map(body) },
            Expr::EvenSplit { var, half_as, even, odd } => {
                Expr::EvenSplit { var: *var, half_as: *half_as, even: map(even), odd: map(odd) }
            }
            Expr::Add(a, b) => Expr::Add(map(a), map(b)),
            Expr::Sub(a, b) => Expr::Sub(map(a), map(b)),
            Expr::Mul(a, b) => Expr::Mul(map(a), map(b)),
            Expr::Div(a, b) => Expr::Div(map(a), map(b)),
            Expr::Neg(a) => Expr::Neg(map(a)),
            other => other.clone(),
        }
    }
}

/// `num / den` as a product of factors in the template notation.
pub fn ratio(num: &str, den: &str) -> Expr {
    Expr::term(tpl(num, den))
}

macro_rules! binop {
    ($tr:ident, $f:ident, $v:ident) => {
        impl $tr for Expr {
            type Output = Expr;
            fn $f(self, o: Expr) -> Expr {
                Expr::$v(Box::new(self), Box::new(o))
            }
        }
        impl $tr<i64> for Expr {
            type Output = Expr;
            fn $f(self, o: i64) -> Expr {
                Expr::$v(Box::new(self), Box::new(Expr::int(o)))
            }
        }
        impl $tr<Expr> for i64 {
            type Output = Expr;
            fn $f(self, o: Expr) -> Expr {
                Expr::$v(Box::new(Expr::int(self)), Box::new(o))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Terms(a) => write!(f, "{a}"),
            Count::Infinite => f.write_str("∞"),
            Count::Default => Ok(()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(r) => write!(f, "{r}"),
            Expr::Mono(m) => write!(f, "{m}"),
            Expr::Term(t) => write!(f, "[{t}]"),
            Expr::Series { def, count, subst } => {
                let sub = match count {
                    Count::Default => String::new(),
                    c => format!("_{{{c}}}"),
                };
                if subst.is_identity() {
                    write!(f, "{}{sub}", def.name)
                } else {
                    write!(f, "{}{sub}({subst})", def.name)
                }
            }
            Expr::Shift { subst, body } => write!(f, "{body}|{{{subst}}}"),
            Expr::Sum { count, body } => write!(f, "Σ_{{k<{count}}} {body}"),
            Expr::SignPow(e) => write!(f, "(-1)^{{{e}}}"),
            Expr::QQuad { var, quad } => write!(f, "q^{{({}{}²+{}{}+{})/2}}", quad.0, var.letter(), quad.1, var.letter(), quad.2),
            Expr::EvenSplit { var, even, odd, .. } => write!(f, "{{{even} if {} even; {odd} otherwise}}", var.letter()),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}·{b}"),
            Expr::Div(a, b) => write!(f, "{a}/({b})"),
            Expr::Neg(a) => write!(f, "-{a}"),
        }
    }
}
