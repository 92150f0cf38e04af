//! Signed rational multiples of parameter powers with half-integer, meta-affine exponents.

use std::fmt;
use std::str::FromStr;

use dashu::base::Abs;
use dashu::rational::RBig;

use super::parse;
use super::symbol::{Affine, Meta, MetaVar, Symbol};

/// `sign · coeff · ∏ sym^{exp/2}` with every exponent an affine form in `n, m, k, δ`.
///
/// Exponents are stored doubled so `q^{3/2}` has exponent numerator 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub sign: i8,
    /// Positive rational coefficient.
    pub coeff: RBig,
    /// Doubled exponents, indexed by [`Symbol::index`].
    pub exps: [Affine; 6],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { sign: 1, coeff: RBig::ONE, exps: [Affine::ZERO; 6] }
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut m = Monomial::one();
        m.exps[s.index()] = Affine::constant(2);
        m
    }

    /// `q^{e/2}` for an integer `e`.
    pub fn q_half_power(e2: i64) -> Self {
        let mut m = Monomial::one();
        m.exps[Symbol::Q.index()] = Affine::constant(e2);
        m
    }

    /// Parses the compact notation (`q^{3/2}a/b`, `-bd/q^3a`, `q^{2+3k}`), panicking on
    /// malformed input. Intended for static catalog entries.
    pub fn lit(s: &str) -> Self {
        s.parse().unwrap_or_else(|e| panic!("bad monomial literal: {e}"))
    }

    /// Doubled exponent of `s`.
    pub fn exp2(&self, s: Symbol) -> &Affine {
        &self.exps[s.index()]
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.coeff == RBig::ONE && self.exps.iter().all(Affine::is_zero)
    }

    pub fn mentions(&self, v: MetaVar) -> bool {
        self.exps.iter().any(|e| e.coef(v) != 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (x, y) in exps.iter_mut().zip(o.exps.iter()) {
            *x = x.add(y);
        }
        Monomial { sign: self.sign * o.sign, coeff: &self.coeff * &o.coeff, exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { sign: self.sign, coeff: RBig::ONE / &self.coeff, exps: self.exps.map(|e| e.neg()) }
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        self.mul(&o.inv())
    }

    pub fn powi(&self, p: i64) -> Monomial {
        let coeff = if p >= 0 { self.coeff.pow(p as usize) } else { (RBig::ONE / &self.coeff).pow(p.unsigned_abs() as usize) };
        let sign = if p % 2 == 0 { 1 } else { self.sign };
        Monomial { sign, coeff, exps: self.exps.map(|e| e.scale(p)) }
    }

    /// Multiplies every exponent by `q^{e2/2}`.
    pub fn times_q_half(&self, e2: Affine) -> Monomial {
        let mut m = self.clone();
        m.exps[Symbol::Q.index()] = m.exps[Symbol::Q.index()].add(&e2);
        m
    }

    /// Resolves every exponent at `meta`, leaving a constant monomial.
    pub fn instantiate(&self, meta: &Meta) -> Monomial {
        Monomial {
            sign: self.sign,
            coeff: self.coeff.clone(),
            exps: self.exps.map(|e| Affine::constant(e.eval(meta))),
        }
    }

    /// Coefficient of `k` in the doubled exponent of `q`, and the rest.
    pub fn split_q_k(&self) -> (i64, Monomial) {
        let mut rest = self.clone();
        let qe = &mut rest.exps[Symbol::Q.index()];
        let ck = qe.coef(MetaVar::K);
        qe.c[MetaVar::K as usize] = 0;
        (ck, rest)
    }
}

impl FromStr for Monomial {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse::monomial(s)
    }
}

fn write_power(out: &mut String, s: Symbol, e2: &Affine) {
    out.push(s.letter());
    if *e2 == Affine::constant(2) {
        return;
    }
    if e2.c.iter().all(|&c| c == 0) && e2.c0 % 2 == 0 {
        out.push_str(&format!("^{}", e2.c0 / 2));
    } else {
        out.push_str(&format!("^{{{}}}", e2.render(2)));
    }
}

fn leans_negative(e: &Affine) -> bool {
    (e.c0 < 0 || e.c0 == 0) && e.c.iter().all(|&c| c <= 0) && !e.is_zero()
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        let mut den = String::new();
        if self.sign < 0 {
            num.push('-');
        }
        let (cn, cd) = (self.coeff.numerator().clone().abs(), self.coeff.denominator().clone());
        let num_start = num.len();
        if cn != 1.into() {
            num.push_str(&cn.to_string());
        }
        if cd != 1u8.into() {
            den.push_str(&cd.to_string());
        }
        for s in Symbol::ALL {
            let e = self.exp2(s);
            if e.is_zero() {
                continue;
            }
            if leans_negative(e) {
                write_power(&mut den, s, &e.neg());
            } else {
                write_power(&mut num, s, e);
            }
        }
        if num.len() == num_start {
            num.push('1');
        }
        if den.is_empty() {
            f.write_str(&num)
        } else {
            write!(f, "{num}/{den}")
        }
    }
}
