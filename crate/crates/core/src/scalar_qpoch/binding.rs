//! Parameter bindings, monomial evaluation and parameter substitutions.

use std::fmt;

use dashu::rational::RBig;

use super::monomial::Monomial;
use super::scalar::{ApproxScalar, ExactScalar, Scalar};
use super::symbol::{Meta, Symbol};
use crate::error::{QError, QResult};

#[derive(Clone, Debug)]
struct Slot<S> {
    value: S,
    /// Principal square root, when known.
    root: Option<S>,
}

/// Values of `q, a, b, c, d, e` for one evaluation, with square roots where available.
///
/// Exact bindings built with [`ParameterBinding::from_seeds`] store each value as the square
/// of its seed so half-integer powers stay rational. Bindings produced by a substitution keep a
/// root only when one can be computed exactly; a missing root is an error only if some
/// monomial actually asks for a half power.
#[derive(Clone, Debug)]
pub struct ParameterBinding<S: Scalar> {
    ctx: S::Ctx,
    slots: [Option<Slot<S>>; 6],
}

pub type ExactBinding = ParameterBinding<ExactScalar>;
pub type ApproxBinding = ParameterBinding<ApproxScalar>;

impl<S: Scalar> ParameterBinding<S> {
    pub fn empty(ctx: S::Ctx) -> Self {
        ParameterBinding { ctx, slots: Default::default() }
    }

    pub fn ctx(&self) -> S::Ctx {
        self.ctx
    }

    pub fn mode(&self) -> &'static str {
        if S::EXACT {
            "exact"
        } else {
            "approx"
        }
    }

    /// Binds `sym` to `seed²`, recording `seed` as its root.
    pub fn set_seed(&mut self, sym: Symbol, seed: S) {
        let value = seed.mul(&seed);
        self.slots[sym.index()] = Some(Slot { value, root: Some(seed) });
    }

    /// Binds `sym` to `value`, deriving a root when the backend can.
    pub fn set_value(&mut self, sym: Symbol, value: S) {
        let root = value.sqrt();
        self.slots[sym.index()] = Some(Slot { value, root });
    }

    pub fn set_value_with_root(&mut self, sym: Symbol, value: S, root: Option<S>) {
        self.slots[sym.index()] = Some(Slot { value, root });
    }

    pub fn from_seeds(ctx: S::Ctx, seeds: &[(Symbol, RBig)]) -> Self {
        let mut b = Self::empty(ctx);
        for (s, r) in seeds {
            b.set_seed(*s, S::from_rational(r, ctx));
        }
        b
    }

    pub fn from_values(ctx: S::Ctx, values: &[(Symbol, RBig)]) -> Self {
        let mut b = Self::empty(ctx);
        for (s, r) in values {
            b.set_value(*s, S::from_rational(r, ctx));
        }
        b
    }

    pub fn is_bound(&self, sym: Symbol) -> bool {
        self.slots[sym.index()].is_some()
    }

    pub fn value(&self, sym: Symbol) -> QResult<&S> {
        self.slots[sym.index()].as_ref().map(|s| &s.value).ok_or(QError::MissingBinding(sym))
    }

    pub fn root(&self, sym: Symbol) -> QResult<&S> {
        let slot = self.slots[sym.index()].as_ref().ok_or(QError::MissingBinding(sym))?;
        slot.root.as_ref().ok_or(QError::NonRationalPower(sym))
    }

    /// Bound symbols with their values, in alphabet order.
    pub fn values(&self) -> Vec<(Symbol, &S)> {
        Symbol::ALL.iter().filter_map(|&s| self.slots[s.index()].as_ref().map(|slot| (s, &slot.value))).collect()
    }

    /// Bound symbols with their roots (seeds), in alphabet order.
    pub fn roots(&self) -> Vec<(Symbol, Option<&S>)> {
        Symbol::ALL
            .iter()
            .filter_map(|&s| self.slots[s.index()].as_ref().map(|slot| (s, slot.root.as_ref())))
            .collect()
    }

    /// The same binding converted to floats.
    pub fn to_approx(&self, digits: u32) -> ApproxBinding {
        let mut b = ApproxBinding::empty(digits);
        for s in Symbol::ALL {
            if let Some(slot) = &self.slots[s.index()] {
                b.set_value_with_root(s, slot.value.to_approx(digits), slot.root.as_ref().map(|r| r.to_approx(digits)));
            }
        }
        b
    }

    /// Applies a parameter substitution, evaluating each image under this binding at `meta`.
    pub fn substituted(&self, subst: &Subst, meta: &Meta) -> QResult<Self> {
        let mut out = self.clone();
        for (sym, image) in &subst.0 {
            let inst = image.instantiate(meta);
            let value = monomial_eval(&inst, self, meta)?;
            let root = match half_of(&inst) {
                Some(h) => monomial_eval(&h, self, meta).ok(),
                None => None,
            }
            .or_else(|| value.sqrt());
            out.slots[sym.index()] = Some(Slot { value, root });
        }
        Ok(out)
    }
}

/// The square root of a constant monomial, when every exponent is an integer.
fn half_of(m: &Monomial) -> Option<Monomial> {
    if m.sign < 0 {
        return None;
    }
    let exps = m.exps.iter().map(|e| e.halve()).collect::<Option<Vec<_>>>()?;
    let root = ExactScalar(m.coeff.clone()).sqrt()?;
    let mut h = Monomial::one();
    h.coeff = root.0;
    for (slot, e) in h.exps.iter_mut().zip(exps) {
        *slot = e;
    }
    Some(h)
}

/// Evaluates `sign · coeff · ∏ sym^{exp}` with every exponent resolved at `meta`.
///
/// Integer exponents use the bound value; half-integer ones use the root.
pub fn monomial_eval<S: Scalar>(m: &Monomial, bind: &ParameterBinding<S>, meta: &Meta) -> QResult<S> {
    let mut acc = S::from_rational(&m.coeff, bind.ctx);
    if m.sign < 0 {
        acc = acc.neg();
    }
    for s in Symbol::ALL {
        let e2 = m.exps[s.index()].eval(meta);
        if e2 == 0 {
            continue;
        }
        let factor = if e2 % 2 == 0 { bind.value(s)?.powi(e2 / 2)? } else { bind.root(s)?.powi(e2)? };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

impl Monomial {
    pub fn eval<S: Scalar>(&self, bind: &ParameterBinding<S>, meta: &Meta) -> QResult<S> {
        monomial_eval(self, bind, meta)
    }
}

/// A parameter substitution such as `a ↦ q^{3k}a, b ↦ q^{2n}b`.
///
/// Images are evaluated against the binding being substituted, so all images see the old
/// values simultaneously.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subst(pub Vec<(Symbol, Monomial)>);

impl Subst {
    pub fn identity() -> Self {
        Subst(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `"a=q^{3m}a, b=q^{2n}b"`.
    pub fn lit(s: &str) -> Self {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (lhs, rhs) = part.split_once('=').unwrap_or_else(|| panic!("bad substitution `{part}`"));
            let sym = lhs.trim().chars().next().and_then(Symbol::from_letter).expect("substitution target");
            out.push((sym, Monomial::lit(rhs.trim())));
        }
        Subst(out)
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(s, m)| format!("{s}→{m}")).collect();
        f.write_str(&parts.join(", "))
    }
}
