//! The modified Abel lemma on summation by parts and the six difference pairs.
//!
//! - [`check_lemma`]: `Σ B_k ∇A_k = A_{n-1}B_n - A_{-1}B_0 - Σ A_k ΔB_k` for arbitrary sequences
//! - [`AbelPair`]: a pair `(A_k, B_k)` with closed forms of its differences and boundary values
//! - [`check_pair`]: the five sub-checks tying a pair to its reformulated and shifted sums
//! - [`check_r_split`]: the shifted `R`-function against its two explicit product forms

mod pairs;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{QError, QResult};
use crate::scalar_qpoch::{Meta, Scalar, Subst};
use crate::series::{builtin, tpl, Count, Env, Expr, SeriesDef, TermTemplate};

/// A pair of sequences fed to the Abel lemma, with its closed forms.
#[derive(Clone, Debug)]
pub struct AbelPair {
    pub name: &'static str,
    /// The series (`U` or `V`) the pair transforms.
    pub series: Arc<SeriesDef>,
    pub a: TermTemplate,
    pub b: TermTemplate,
    pub nabla_a: TermTemplate,
    pub delta_b: TermTemplate,
    /// `ϖ = A_{-1}B_0`.
    pub varpi: TermTemplate,
    /// The `n`-only product shared by `R(n)` and its separated shifted form.
    pub r_base: TermTemplate,
    /// `R(n) = A_{n-1}B_n / (A_{-1}B_0)`.
    pub r_closed: TermTemplate,
    /// `Σ_{k<n} B_k ∇A_k` as a multiple of the series.
    pub reformulated: Expr,
    /// `-Σ_{k<n} A_k ΔB_k` as a multiple of the shifted series.
    pub shifted: Expr,
    /// Parameter shift under which `R` is split into `k` and `n` factorials.
    pub r_shift: Subst,
    /// Shifted `R` with the shift written into each argument.
    pub r_first: TermTemplate,
    /// Shifted `R` as `R(n)`'s base times a `k`-indexed product.
    pub r_separated: TermTemplate,
}

/// `ϖ` and `R` at one binding.
#[derive(Clone, Debug)]
pub struct BoundaryData<S> {
    pub varpi: S,
    pub r: S,
}

/// The five sub-checks of [`check_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubCheckKind {
    /// Closed `∇A_k` against `A_k - A_{k-1}`.
    NablaA,
    /// Closed `ΔB_k` against `B_{k+1} - B_k`.
    DeltaB,
    /// Closed `ϖ` against `A_{-1}B_0`.
    Varpi,
    /// Closed `R(n)` against `A_{n-1}B_n / (A_{-1}B_0)`.
    R,
    /// `Σ B_k ∇A_k` against the reformulated series.
    Reformulated,
    /// `-Σ A_k ΔB_k` against the shifted series.
    Shifted,
}

impl fmt::Display for SubCheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubCheckKind::NablaA => "(i) nabla A",
            SubCheckKind::DeltaB => "(ii) delta B",
            SubCheckKind::Varpi => "(iii) varpi",
            SubCheckKind::R => "(iii) R",
            SubCheckKind::Reformulated => "(iv) reformulated sum",
            SubCheckKind::Shifted => "(v) shifted sum",
        })
    }
}

/// One comparison: `direct` is computed from `A`, `B`; `closed` from the stated form.
#[derive(Clone, Debug)]
pub struct SubCheck<S> {
    pub kind: SubCheckKind,
    pub k: Option<i64>,
    pub direct: S,
    pub closed: S,
    pub ok: bool,
}

/// Outcome of [`check_pair`].
#[derive(Clone, Debug)]
pub struct PairReport<S> {
    pub pair: &'static str,
    pub n: i64,
    pub boundary: BoundaryData<S>,
    pub checks: Vec<SubCheck<S>>,
}

impl<S> PairReport<S> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &SubCheck<S>> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Outcome of [`check_r_split`].
#[derive(Clone, Debug)]
pub struct RSplitReport<S> {
    /// `R(n)` evaluated over the shifted parameters.
    pub direct: S,
    pub first: S,
    pub separated: S,
    pub ok: bool,
}

/// Equality test: exact for rationals, `|l - r| <= eps·max(1, |l|)` for floats.
pub fn agree<S: Scalar>(l: &S, r: &S, eps: &S) -> bool {
    let diff = l.sub(r);
    if S::EXACT {
        return diff.is_zero();
    }
    let one = l.one_like();
    let scale = if one.abs_le(l) { l.abs() } else { one };
    diff.abs_le(&eps.mul(&scale))
}

/// Checks the modified Abel lemma on `a = [A_{-1}, .., A_{n-1}]` and `b = [B_0, .., B_n]`.
///
/// Returns both sides; the lemma holds when they agree. Both slices must have length `n + 1`.
pub fn check_lemma<S: Scalar>(a: &[S], b: &[S]) -> QResult<(S, S)> {
    if a.len() != b.len() || a.is_empty() {
        return Err(QError::Invalid("lemma needs A_{-1}..A_{n-1} and B_0..B_n of equal length".into()));
    }
    let n = a.len() - 1;
    let zero = a[0].zero_like();
    let mut lhs = zero.clone();
    let mut tail = zero;
    for k in 0..n {
        // A_k sits at a[k + 1].
        lhs = lhs.add(&b[k].mul(&a[k + 1].sub(&a[k])));
        tail = tail.add(&a[k + 1].mul(&b[k + 1].sub(&b[k])));
    }
    let rhs = a[n].mul(&b[n]).sub(&a[0].mul(&b[0])).sub(&tail);
    Ok((lhs, rhs))
}

fn build() -> Vec<AbelPair> {
    pairs::SPECS
        .iter()
        .map(|s| {
            let series = builtin(s.series).expect("catalog name");
            let d = s.d;
            let r_base = tpl(s.r_base.0, s.r_base.1);
            let r_closed = tpl(s.r_lin.0, s.r_lin.1).times(&r_base);
            let mut sep = tpl(s.r_sep.0, s.r_sep.1);
            if let Some(g) = s.r_sep_geo {
                sep = sep.geo(1, g, (0, 0, 0));
            }
            AbelPair {
                name: s.name,
                series: series.clone(),
                a: tpl(s.a.0, s.a.1),
                b: tpl(s.b.0, s.b.1),
                nabla_a: tpl(s.nabla_a.0, &format!("{d} {}", s.nabla_a.1)),
                delta_b: tpl(s.delta_b.0, s.delta_b.1),
                varpi: tpl(s.varpi.0, s.varpi.1),
                r_closed,
                reformulated: Expr::series(series.clone(), Count::Default, "") * Expr::term(tpl(s.iv, d)),
                shifted: Expr::series(series, Count::Default, s.v_subst) * Expr::term(tpl(s.v.0, s.v.1)),
                r_shift: Subst::lit(s.r_shift),
                r_first: tpl(s.r_first.0, s.r_first.1),
                r_separated: r_base.clone().times(&sep),
                r_base,
            }
        })
        .collect()
}

/// All six pairs, in the order u_quad, u_cubic, u_quartic, v_quad, v_cubic, v_quartic.
pub fn pairs() -> &'static [AbelPair] {
    static PAIRS: OnceLock<Vec<AbelPair>> = OnceLock::new();
    PAIRS.get_or_init(build)
}

/// Looks up a pair by name.
pub fn pair(name: &str) -> QResult<&'static AbelPair> {
    pairs().iter().find(|p| p.name == name).ok_or_else(|| QError::Invalid(format!("unknown Abel pair {name}")))
}

/// Evaluates `ϖ` and `R(n)` directly from `A` and `B`.
pub fn boundary<S: Scalar>(p: &AbelPair, env: &Env<S>, n: i64) -> QResult<BoundaryData<S>> {
    let meta = Meta::new(n, 0);
    let varpi = p.a.eval(env, &meta.with_k(-1))?.mul(&p.b.eval(env, &meta.with_k(0))?);
    let end = p.a.eval(env, &meta.with_k(n - 1))?.mul(&p.b.eval(env, &meta.with_k(n))?);
    if varpi.is_zero() {
        return Err(QError::Pole("A_{-1}B_0".into()));
    }
    let r = end.div(&varpi)?;
    Ok(BoundaryData { varpi, r })
}

/// Runs sub-checks (i) to (v) of a pair at `n`.
pub fn check_pair<S: Scalar>(p: &AbelPair, env: &Env<S>, n: i64) -> QResult<PairReport<S>> {
    let meta = Meta::new(n, 0);
    let at = |t: &TermTemplate, k: i64| t.eval(env, &meta.with_k(k));
    let a: Vec<S> = (-1..n).map(|k| at(&p.a, k)).collect::<QResult<_>>()?;
    let b: Vec<S> = (0..=n).map(|k| at(&p.b, k)).collect::<QResult<_>>()?;
    let mut checks = Vec::new();
    let mut push = |kind, k, direct: S, closed: S| {
        let ok = agree(&direct, &closed, &env.eps);
        checks.push(SubCheck { kind, k, direct, closed, ok });
    };
    let zero = a[0].zero_like();
    let (mut sum_iv, mut sum_v) = (zero.clone(), zero);
    for k in 0..n {
        let i = k as usize;
        let nabla = a[i + 1].sub(&a[i]);
        let delta = b[i + 1].sub(&b[i]);
        sum_iv = sum_iv.add(&b[i].mul(&nabla));
        sum_v = sum_v.sub(&a[i + 1].mul(&delta));
        push(SubCheckKind::NablaA, Some(k), nabla, at(&p.nabla_a, k)?);
        push(SubCheckKind::DeltaB, Some(k), delta, at(&p.delta_b, k)?);
    }
    let boundary = boundary(p, env, n)?;
    push(SubCheckKind::Varpi, None, boundary.varpi.clone(), p.varpi.eval(env, &meta)?);
    push(SubCheckKind::R, None, boundary.r.clone(), p.r_closed.eval(env, &meta)?);
    push(SubCheckKind::Reformulated, None, sum_iv, p.reformulated.eval(env, &meta)?);
    push(SubCheckKind::Shifted, None, sum_v, p.shifted.eval(env, &meta)?);
    Ok(PairReport { pair: p.name, n, boundary, checks })
}

/// Compares the shifted `R(n)` with its two explicit product forms at index `k`.
pub fn check_r_split<S: Scalar>(p: &AbelPair, k: i64, n: i64, env: &Env<S>) -> QResult<RSplitReport<S>> {
    let meta = Meta::new(n, 0).with_k(k);
    let shifted = env.rebind(env.bind.substituted(&p.r_shift, &meta)?);
    let direct = p.r_closed.eval(&shifted, &meta)?;
    let first = p.r_first.eval(env, &meta)?;
    let separated = p.r_separated.eval(env, &meta)?;
    let ok = agree(&direct, &first, &env.eps) && agree(&direct, &separated, &env.eps);
    Ok(RSplitReport { direct, first, separated, ok })
}
