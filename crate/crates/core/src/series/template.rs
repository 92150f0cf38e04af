//! Term templates: the factor records that describe one summand.
//!
//! - [`LinearFactorSpec`]: `(1 - m q^{c k})`, or `θ(m q^{c k}; p)` when elliptic
//! - [`FactorSpec`]: `(x; q^j)_{len}` or `[x; q^j, p]_{len}` with a meta-affine length
//! - [`GeometricSpec`]: `(±base)^k q^{(αk² + βk + γ)/2}`
//! - [`TermTemplate`]: the product of all of the above and a constant scale

use std::fmt;

use super::expr::Env;
use crate::elliptic::{ell_poch, theta};
use crate::error::{QError, QResult};
use crate::scalar_qpoch::{poch, poch_inf, Affine, Meta, MetaVar, Monomial, Scalar, Symbol};

/// Numerator or denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Num,
    Den,
}

/// `(1 - m·q^{kcoef·k})`; with `elliptic` set the factor is `θ(m·q^{kcoef·k}; p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactorSpec {
    /// Free of `k`.
    pub m: Monomial,
    pub kcoef: i64,
    pub side: Side,
    pub elliptic: bool,
}

/// Length of a shifted factorial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(Affine),
    Infinite,
}

/// `(arg; q^{base_exp2/2})_{len}`, or the elliptic `[arg; q^{base_exp2/2}, p]_{len}`.
///
/// The length is an affine form in `k, n, m, δ`; negative resolved lengths use the
/// standard extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub arg: Monomial,
    /// Doubled exponent of `q` in the base, so `q^{-1}` is `-2`.
    pub base_exp2: i64,
    pub len: Length,
    pub side: Side,
    pub elliptic: bool,
}

/// `sign^k · base^k · q^{(α k² + β k + γ)/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricSpec {
    pub sign: i8,
    pub base: Monomial,
    pub quad: (i64, i64, i64),
}

impl Default for GeometricSpec {
    fn default() -> Self {
        GeometricSpec { sign: 1, base: Monomial::one(), quad: (0, 0, 0) }
    }
}

/// One summand as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermTemplate {
    pub linear: Vec<LinearFactorSpec>,
    pub poch_factors: Vec<FactorSpec>,
    pub geometric: GeometricSpec,
    /// Constant monomial factor.
    pub scale: Monomial,
}

impl Default for TermTemplate {
    fn default() -> Self {
        TermTemplate { linear: Vec::new(), poch_factors: Vec::new(), geometric: GeometricSpec::default(), scale: Monomial::one() }
    }
}

impl LinearFactorSpec {
    /// The full argument `m q^{kcoef k}` as a monomial in `k`.
    pub fn argument(&self) -> Monomial {
        self.m.times_q_half(Affine::var(MetaVar::K).scale(2 * self.kcoef))
    }

    pub(crate) fn value<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<S> {
        let x = self.argument().eval(&env.bind, meta)?;
        if self.elliptic {
            theta(&x, env.nome()?, &env.eps)
        } else {
            Ok(x.one_minus())
        }
    }
}

impl FactorSpec {
    pub(crate) fn base<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<S> {
        Monomial::q_half_power(self.base_exp2).eval(&env.bind, meta)
    }

    pub(crate) fn value<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<S> {
        let x = self.arg.eval(&env.bind, meta)?;
        let b = self.base(env, meta)?;
        match (self.len, self.elliptic) {
            (Length::Finite(l), false) => poch(&x, &b, l.eval(meta)),
            (Length::Finite(l), true) => ell_poch(&x, &b, env.nome()?, l.eval(meta), &env.eps),
            (Length::Infinite, false) => poch_inf(&x, &b, &env.eps),
            (Length::Infinite, true) => Err(QError::Invalid("infinite elliptic product".into())),
        }
    }
}

impl GeometricSpec {
    pub fn is_trivial(&self) -> bool {
        self.sign == 1 && self.base.is_one() && self.quad == (0, 0, 0)
    }

    /// Doubled exponent of `q` contributed by the quadratic part at `k`.
    pub fn quad_exp2(&self, k: i64) -> i64 {
        let (a, b, c) = self.quad;
        a * k * k + b * k + c
    }

    pub(crate) fn value<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<S> {
        let k = meta.k;
        let mut v = self.base.eval(&env.bind, meta)?.powi(k)?;
        if self.sign < 0 && k % 2 != 0 {
            v = v.neg();
        }
        let quad = Monomial::q_half_power(self.quad_exp2(k)).eval(&env.bind, meta)?;
        Ok(v.mul(&quad))
    }
}

impl TermTemplate {
    /// Parses numerator and denominator product strings; see [`crate::series::notation`].
    pub fn parse(num: &str, den: &str) -> Result<TermTemplate, String> {
        super::notation::parse_template(num, den)
    }

    /// Adds the geometric factor `sign^k base^k q^{(αk²+βk+γ)/2}`.
    pub fn geo(mut self, sign: i8, base: &str, quad: (i64, i64, i64)) -> TermTemplate {
        let b = Monomial::lit(base);
        self.geometric.sign *= sign;
        self.geometric.base = self.geometric.base.mul(&b);
        let (a, bb, c) = self.geometric.quad;
        self.geometric.quad = (a + quad.0, bb + quad.1, c + quad.2);
        self
    }

    /// Multiplies by `other` factor-wise.
    pub fn times(mut self, other: &TermTemplate) -> TermTemplate {
        self.linear.extend(other.linear.iter().cloned());
        self.poch_factors.extend(other.poch_factors.iter().cloned());
        self.scale = self.scale.mul(&other.scale);
        let g = &other.geometric;
        self.geometric.sign *= g.sign;
        self.geometric.base = self.geometric.base.mul(&g.base);
        let (a, b, c) = self.geometric.quad;
        self.geometric.quad = (a + g.quad.0, b + g.quad.1, c + g.quad.2);
        self
    }

    /// Whether any argument or geometric base, as opposed to a length, depends on `k`.
    pub fn k_in_arguments(&self) -> bool {
        self.linear.iter().any(|l| l.m.mentions(MetaVar::K))
            || self.poch_factors.iter().any(|f| f.arg.mentions(MetaVar::K))
            || self.geometric.base.mentions(MetaVar::K)
            || self.scale.mentions(MetaVar::K)
    }

    pub fn is_elliptic(&self) -> bool {
        self.linear.iter().any(|l| l.elliptic) || self.poch_factors.iter().any(|f| f.elliptic)
    }

    /// The same template with every elliptic factor replaced by its `p = 0` counterpart.
    pub fn to_basic(&self) -> TermTemplate {
        let mut t = self.clone();
        t.linear.iter_mut().for_each(|l| l.elliptic = false);
        t.poch_factors.iter_mut().for_each(|f| f.elliptic = false);
        t
    }

    /// Evaluates the template at `meta` (the summation index is `meta.k`).
    pub fn eval<S: Scalar>(&self, env: &Env<S>, meta: &Meta) -> QResult<S> {
        let mut num = self.scale.eval(&env.bind, meta)?;
        let mut den = num.one_like();
        for l in &self.linear {
            let v = l.value(env, meta)?;
            match l.side {
                Side::Num => num = num.mul(&v),
                Side::Den => {
                    if v.is_zero() {
                        return Err(QError::Pole(l.to_string()));
                    }
                    den = den.mul(&v);
                }
            }
        }
        for f in &self.poch_factors {
            let v = f.value(env, meta).map_err(|e| relabel(e, f))?;
            match f.side {
                Side::Num => num = num.mul(&v),
                Side::Den => {
                    if v.is_zero() {
                        return Err(QError::Pole(f.to_string()));
                    }
                    den = den.mul(&v);
                }
            }
        }
        if !self.geometric.is_trivial() {
            num = num.mul(&self.geometric.value(env, meta)?);
        }
        num.div(&den)
    }
}

/// Names the factor in a negative-length pole.
pub(crate) fn relabel(e: QError, f: &FactorSpec) -> QError {
    match e {
        QError::PoleAtExtension(_) => QError::PoleAtExtension(f.to_string()),
        other => other,
    }
}

impl fmt::Display for LinearFactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arg = self.argument();
        if self.elliptic {
            write!(f, "θ({arg})")
        } else if arg.sign < 0 {
            let mut pos = arg.clone();
            pos.sign = 1;
            write!(f, "(1+{pos})")
        } else {
            write!(f, "(1-{arg})")
        }
    }
}

fn base_text(e2: i64) -> String {
    match e2 {
        2 => "q".to_string(),
        _ if e2 % 2 == 0 && e2 > 0 => format!("q^{}", e2 / 2),
        _ if e2 % 2 == 0 => format!("q^{{{}}}", e2 / 2),
        _ => format!("q^{{{}}}", Affine::constant(e2).render(2)),
    }
}

fn len_text(len: &Length) -> String {
    match len {
        Length::Infinite => "∞".to_string(),
        Length::Finite(a) => {
            let s = a.render(1);
            if s.chars().count() == 1 {
                s
            } else {
                format!("{{{s}}}")
            }
        }
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = base_text(self.base_exp2);
        let len = len_text(&self.len);
        if self.elliptic {
            write!(f, "[{};{base},p]_{len}", self.arg)
        } else {
            write!(f, "({};{base})_{len}", self.arg)
        }
    }
}

impl fmt::Display for GeometricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        if self.sign < 0 || !self.base.is_one() {
            write!(f, "({sign}{})^k", self.base)?;
        }
        let (a, b, c) = self.quad;
        if (a, b, c) != (0, 0, 0) {
            let mut parts = Vec::new();
            for (coef, var) in [(a, "k²"), (b, "k"), (c, "")] {
                if coef != 0 {
                    parts.push(format!("{coef}{var}"));
                }
            }
            write!(f, "q^{{({})/2}}", parts.join("+").replace("+-", "-"))?;
        }
        Ok(())
    }
}

impl fmt::Display for TermTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num: Vec<String> = Vec::new();
        let mut den: Vec<String> = Vec::new();
        if !self.scale.is_one() {
            num.push(self.scale.to_string());
        }
        for l in &self.linear {
            match l.side {
                Side::Num => num.push(l.to_string()),
                Side::Den => den.push(l.to_string()),
            }
        }
        for p in &self.poch_factors {
            match p.side {
                Side::Num => num.push(p.to_string()),
                Side::Den => den.push(p.to_string()),
            }
        }
        if !self.geometric.is_trivial() {
            num.push(self.geometric.to_string());
        }
        let num = if num.is_empty() { "1".to_string() } else { num.join(" ") };
        if den.is_empty() {
            f.write_str(&num)
        } else {
            write!(f, "{num} / {}", den.join(" "))
        }
    }
}

/// Symbols a template reads.
pub fn symbols_of(t: &TermTemplate) -> Vec<Symbol> {
    let mut used = [false; 6];
    let mut mark = |m: &Monomial| {
        for s in Symbol::ALL {
            if !m.exp2(s).is_zero() {
                used[s.index()] = true;
            }
        }
    };
    t.linear.iter().for_each(|l| mark(&l.argument()));
    t.poch_factors.iter().for_each(|p| mark(&p.arg));
    mark(&t.geometric.base);
    mark(&t.scale);
    used[Symbol::Q.index()] = true;
    Symbol::ALL.into_iter().filter(|s| used[s.index()]).collect()
}
