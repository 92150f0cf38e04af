//! The identity catalog and the deliberately wrong fixture variants.
//!
//! Identity ids follow their role: `thm-*` m-step transformations, `rec-*`/`iter-*`
//! recurrences, `prop-*`/`spec-*` nonterminating transformations, `cor-*` closed
//! evaluations, `ell-*` elliptic extensions. Fixtures carry the `fixture-` prefix.

use std::sync::OnceLock;

use super::recurrence::families;
use super::{IdentityDef, Kind};
use crate::abel::pair;
use crate::scalar_qpoch::{Affine, MetaVar, Subst, Symbol};
use crate::series::{builtin, ratio, tpl, Count, Expr, SeriesDef, SeriesRange, TermTemplate};

use MetaVar::{Delta, M, N};

fn series(name: &str, count: Count, subst: &str) -> Expr {
    Expr::series(builtin(name).expect("catalog name"), count, subst)
}

fn finite(name: &str, subst: &str) -> Expr {
    series(name, Count::Default, subst)
}

fn infinite(name: &str, subst: &str) -> Expr {
    series(name, Count::Infinite, subst)
}

/// A one-off series summed over `0 ≤ k < len`, or to infinity when `len` is `None`.
fn local(name: &str, t: TermTemplate, len: Option<&str>) -> Expr {
    let range = match len {
        Some(l) => SeriesRange::Partial(Affine::lit(l)),
        None => SeriesRange::Infinite,
    };
    Expr::series(SeriesDef::new(name, t, range), Count::Default, "")
}

fn term_of(name: &str) -> Expr {
    Expr::term(builtin(name).expect("catalog name").template.clone())
}

fn r_base(name: &str) -> Expr {
    Expr::term(pair(name).expect("pair name").r_base.clone())
}

/// `1 - R(n)` over the parameters shifted `k` steps.
fn one_minus_r_shifted(name: &str) -> Expr {
    let p = pair(name).expect("pair name");
    Expr::one() - Expr::Shift { subst: p.r_shift.clone(), body: Box::new(Expr::term(p.r_closed.clone())) }
}

fn free(letters: &str) -> Vec<Symbol> {
    letters.chars().map(|c| Symbol::from_letter(c).expect("symbol letter")).collect()
}

fn def(id: &str, kind: Kind, metas: &[MetaVar], syms: &str, anchor: &'static str, lhs: Expr, rhs: Expr) -> IdentityDef {
    IdentityDef {
        id: id.to_string(),
        kind,
        metas: metas.to_vec(),
        free: free(syms),
        derive: Subst::identity(),
        constraints: String::new(),
        anchor,
        min_meta: 0,
        lhs,
        rhs,
        alt_lhs: None,
        fixture: false,
    }
}

impl IdentityDef {
    fn derived(mut self, subst: &str) -> Self {
        self.derive = Subst::lit(subst);
        self.constraints = subst.to_string();
        self
    }

    fn from_meta(mut self, min: i64) -> Self {
        self.min_meta = min;
        self
    }

    fn alt(mut self, e: Expr) -> Self {
        self.alt_lhs = Some(e);
        self
    }

    fn as_fixture(mut self) -> Self {
        self.fixture = true;
        self
    }
}

use Kind::{EllipticNumeric as Ell, NonterminatingNumeric as Num, TerminatingExact as Exact};

/// `S(n) - S(n; shift)·w = k·(T(m) - T(m; a→q^{5n}a, …)·r_base)`.
#[allow(clippy::too_many_arguments)]
fn m_step_theorem(
    id: &str,
    anchor: &'static str,
    s: &str,
    shift_m: &str,
    w: Expr,
    k: Expr,
    t: &str,
    shift_n: &str,
    pair_name: &str,
) -> IdentityDef {
    let syms = if s == "U" { "qabd" } else { "qace" };
    let lhs = finite(s, "") - finite(s, shift_m) * w;
    let rhs = k * (finite(t, "") - finite(t, shift_n) * r_base(pair_name));
    def(id, Exact, &[N, M], syms, anchor, lhs, rhs)
}

fn w_quad() -> Expr {
    ratio(
        "(q^2a/bd;q)_{3m} (q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6)_m",
        "(q^5a^2/b^2d^2;q^2)_{3m} (q^3a/b,q^3a/d,q^6a/b^2d^2;q^3)_m",
    )
}

fn k_quad() -> Expr {
    ratio("(1-q^3a/bd) (1-bd/q^2) (1-bd/q^4)", "(1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-b^2d^2/q^6a)")
}

fn w_cubic() -> Expr {
    ratio(
        "(b;q^2)_{2m} (q^2a/bd;q)_{2m} (q^3a^2/bd,q^9a^2/b^2d^3;q^6)_m",
        "(q^5a^2/b^2d^2;q^2)_{2m} (q^3a/d;q^3)_{2m} (q^2/d,bd;q^2)_m",
    )
}

fn k_cubic() -> Expr {
    ratio("(1-bd/q^2) (1-q^3a/bd) (1-a/b)", "(1-d/q^2) (1-q^3a/d) (1-q^5a^2/b^2d^2)")
}

fn w_quartic() -> Expr {
    ratio(
        "(b^2d^2/q^3a^2;q^2)_m (b;q^2)_{2m} (b^2d^2/q^3a,b/a;q^3)_m (q^2a/bd;q^{-1})_m",
        "(bd,q^2/d;q^2)_m (bd/qa,bd/q^2a;q)_m (q^3a/d;q^3)_m (b^3d^2/q^3a^2;q^6)_m",
    )
}

fn k_quartic() -> Expr {
    ratio("(1-a/b) (1-bd/q^2) (1-b^2d^2/q^3a^2)", "(1-d/q^2) (1-bd/qa) (1-b^3d^2/q^3a^2)")
}

fn wv_quad() -> Expr {
    ratio(
        "(qc,qe,qc^2e^2/a^3;q^3)_m (qc^2e^2/a^2;q^2)_{3m}",
        "(q^5ce,q^2c^2e^3/a^3,q^2c^3e^2/a^3;q^6)_m (qce/a;q)_{3m}",
    )
}

fn kv_quad() -> Expr {
    ratio("(1-a/qc) (1-a/qe) (1-qc^2e^2/a^3)", "(1-a/q^2ce) (1-q^2c^3e^2/a^3) (1-q^2c^2e^3/a^3)")
}

fn wv_cubic() -> Expr {
    ratio(
        "(qc;q^3)_{2m} (qc^2e^2/a^2;q^2)_{2m} (qc/a,a^2/ce;q^2)_m",
        "(qce/a;q)_{2m} (qa/e;q^2)_{2m} (q^5ce,q^2c^3e^2/a^3;q^6)_m",
    )
}

fn kv_cubic() -> Expr {
    ratio("(1-ce/a) (1-qc/a) (1-a^3/qc^2e^2)", "(1-a/qce) (1-qa/e) (1-q^2c^3e^2/a^3)")
}

/// The quartic `V` weight; `len` is the length of the base-`q^3` factors.
fn wv_quartic(len: &str) -> Expr {
    ratio(
        &format!("(qc/a,a^2/ce;q^2)_m (a/ce,qa/ce;q)_m (qc;q^3)_{len} (q^4a^3/c^2e^3;q^6)_m"),
        &format!("(qa^2/c^2e^2;q^2)_m (qa/e;q^2)_{{2m}} (q^2a^3/c^2e^2,q^2/e;q^3)_{len} (ce/qa;q^{{-1}})_m"),
    )
}

fn kv_quartic() -> Expr {
    ratio("(1-a/qc) (1-a/ce) (1-ce/q)", "(1-qa^2/c^2e^2) (1-e/q^2) (1-qa/e)")
}

const SHIFT_U_N: &str = "a=q^{5n}a, b=q^{2n}b, d=q^{2n}d";
const SHIFT_V_N: &str = "a=q^{5n}a, c=q^{3n}c, e=q^{3n}e";

fn theorems() -> Vec<IdentityDef> {
    vec![
        m_step_theorem(
            "thm-4u2",
            "quartic U-sum against its quadratic companion, m-step transformation",
            "U",
            "a=q^{3m}a",
            w_quad(),
            k_quad(),
            "U_diamond",
            SHIFT_U_N,
            "u_quad",
        ),
        m_step_theorem(
            "thm-4u3",
            "quartic U-sum against its cubic companion, m-step transformation",
            "U",
            "a=q^{4m}a, b=q^{4m}b, d=q^{-2m}d",
            w_cubic(),
            k_cubic(),
            "U_triangle",
            SHIFT_U_N,
            "u_cubic",
        ),
        m_step_theorem(
            "thm-4u4",
            "quartic U-sum against the quartic companion U-star, m-step transformation",
            "U",
            "a=q^ma, b=q^{4m}b, d=q^{-2m}d",
            w_quartic(),
            k_quartic(),
            "U_star",
            SHIFT_U_N,
            "u_quartic",
        ),
        m_step_theorem(
            "thm-4v2",
            "quartic V-sum against its quadratic companion, m-step transformation",
            "V",
            "a=q^{3m}a, c=q^{3m}c, e=q^{3m}e",
            wv_quad(),
            kv_quad(),
            "V_diamond",
            SHIFT_V_N,
            "v_quad",
        ),
        m_step_theorem(
            "thm-4v3",
            "quartic V-sum against its cubic companion, m-step transformation",
            "V",
            "a=q^{4m}a, c=q^{6m}c",
            wv_cubic(),
            kv_cubic(),
            "V_triangle",
            SHIFT_V_N,
            "v_cubic",
        ),
        m_step_theorem(
            "thm-4v4",
            "quartic V-sum against the quartic companion V-star, m-step transformation",
            "V",
            "a=q^ma, c=q^{3m}c, e=q^{-3m}e",
            wv_quartic("m"),
            kv_quartic(),
            "V_star",
            SHIFT_V_N,
            "v_quartic",
        ),
    ]
}

/// Anchors of the recurrence and iteration entries, in family order.
const REC_ANCHORS: [(&str, &str); 6] = [
    ("one-step recurrence U(a) in terms of U(q^3a)", "m-fold iterate of the q^3 recurrence for U"),
    ("one-step recurrence U(a,b,d) in terms of U(q^4a,q^4b,d/q^2)", "m-fold iterate of the q^4 recurrence for U"),
    ("one-step recurrence U(a,b,d) in terms of U(qa,q^4b,d/q^2)", "m-fold iterate of the q recurrence for U"),
    ("one-step recurrence V(a,c,e) in terms of V(q^3a,q^3c,q^3e)", "m-fold iterate of the q^3 recurrence for V"),
    ("one-step recurrence V(a,c,e) in terms of V(q^4a,q^6c,e)", "m-fold iterate of the q^4 recurrence for V"),
    ("one-step recurrence V(a,c,e) in terms of V(qa,q^3c,e/q^3)", "m-fold iterate of the q recurrence for V"),
];

/// The m-step displays: `S(n) = S(n; σ^m)·W + c·Σ_{k<m} T_k·(1 - R(n; σ^k))`.
fn iterations() -> Vec<(Expr, Expr)> {
    let c_u3 = -ratio(
        "a (1-q^2/bd) (1-q^4/bd) (1-q^3a/bd)",
        "(1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-q^6a/b^2d^2)",
    );
    let c_v3 = -ratio("a (1-qc/a) (1-qe/a) (1-qc^2e^2/a^3)", "(1-q^2ce/a) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3)");
    let c_v1 = -ratio("a (1-a/ce) (1-qc/a) (1-q/ce)", "(1-qa^2/c^2e^2) (1-q^2/e) (1-qa/e)");
    let rows = [
        ("U", "a=q^{3m}a", w_quad(), c_u3, "U_diamond", "u_quad"),
        ("U", "a=q^{4m}a, b=q^{4m}b, d=q^{-2m}d", w_cubic(), k_cubic(), "U_triangle", "u_cubic"),
        ("U", "a=q^ma, b=q^{4m}b, d=q^{-2m}d", w_quartic(), k_quartic(), "U_star", "u_quartic"),
        ("V", "a=q^{3m}a, c=q^{3m}c, e=q^{3m}e", wv_quad(), c_v3, "V_diamond", "v_quad"),
        ("V", "a=q^{4m}a, c=q^{6m}c", wv_cubic(), kv_cubic(), "V_triangle", "v_cubic"),
        ("V", "a=q^ma, c=q^{3m}c, e=q^{-3m}e", wv_quartic("m"), c_v1, "V_star", "v_quartic"),
    ];
    rows.into_iter()
        .map(|(s, shift, w, c, t, p)| {
            let sum = Expr::sum_k("m", term_of(t) * one_minus_r_shifted(p));
            (finite(s, ""), finite(s, shift) * w + c * sum)
        })
        .collect()
}

fn recurrences() -> Vec<IdentityDef> {
    let mut out = Vec::new();
    for ((fam, (rhs_iter_lhs, rhs_iter)), (a_rec, a_iter)) in
        families().iter().zip(iterations()).zip(REC_ANCHORS)
    {
        let syms = if fam.series.name == "U" { "qabd" } else { "qace" };
        let lhs = Expr::Series { def: fam.series.clone(), count: Count::Default, subst: Subst::identity() };
        out.push(def(fam.rec_id, Exact, &[N], syms, a_rec, lhs, fam.step_rhs()));
        out.push(def(fam.iter_id, Exact, &[N, M], syms, a_iter, rhs_iter_lhs, rhs_iter));
    }
    out
}

fn u_special() -> Vec<IdentityDef> {
    let prop = def(
        "prop-4u4-special",
        Exact,
        &[N],
        "qab",
        "U-sum with q^3a^2 = b^2d^2 as a reversed U-star sum times products",
        finite("U", ""),
        series("U_star", Count::Terms(Affine::lit("n")), SHIFT_U_N)
            * ratio(
                "(a;q^3)_n (bd;q^6)_n (qa/bd;q)_n (q^3a/bd;q)_{n-1} (q^2b,d;q^2)_{n-1}",
                "(q^3a/d;q^3)_n (q^3a/b;q^3)_{n-1} (qa/bd;q^{-1})_n (bd;q^2)_{2n-1} (q^2;q^2)_{n-1}",
            ),
    )
    .derived("d=q^{3/2}a/b")
    .from_meta(1);
    let inverted_term = tpl(
        "(q^{1/2};q)_k (q^{3/2}a/b;q^2)_k (1-q^{6n-5k-9/2}b) (q^{2n}b;q^2)_{2n-2-2k} (q^{3n}a;q^3)_{n-1-k} \
         (q^2;q^2)_{n-1} (q^3a/b;q^3)_{n-1}",
        "(q^2;q^2)_k (q^3a/b;q^3)_k (q^{4n-1/2}a;q^2)_{n-1-k} (q^{3/2+3n}b;q^3)_{n-1-k} (q^6b;q^6)_{n-1-k} \
         (q^{3/2}a/b;q^2)_{n-1} (q^{1/2};q)_{n-1}",
    )
    .geo(1, "1", (1, 2, 0));
    let inversion = def(
        "ustar-inversion",
        Exact,
        &[N],
        "qab",
        "U-star at shifted arguments rewritten with the summation index reversed",
        series("U_star", Count::Terms(Affine::lit("n")), "a=q^{5n}a, b=q^{2n}b, d=q^{3/2+2n}a/b"),
        Expr::sum_k("n", Expr::sign_pow("n-1+k") * Expr::q_quad(N, (-1, 0, 1)) * Expr::term(inverted_term)),
    );
    vec![prop, inversion]
}

/// `(1-q^{5k}a)/(1-a)`-normalized `V` over `count` terms with `subst`.
fn v_normalized(count: &str, subst: &str) -> Expr {
    let v = builtin("V").expect("catalog name").normalized();
    Expr::series(v, Count::Terms(Affine::lit(count)), subst)
}

fn chu_48d_rhs(den3: &str) -> Expr {
    Expr::even_split(
        N,
        M,
        ratio("(q^2a;q^2)_{3m} (q^3;q^6)_m", &format!("({den3};q^2)_{{3m}} (q^{{9/2}}a^{{3/2}};q^6)_m")),
        Expr::zero(),
    )
}

fn chu_wang_lhs(tail: &str) -> Expr {
    local(
        "chu_wang_40",
        tpl(
            &format!("(1-q^{{5k-1-4m}}) (q^{{-1-4m}};q^2)_k (q^{{-2m}};q^2)_{{2k}} (qc,{tail};q^3)_k"),
            "(1-q^{-1-4m}) (q^{-4m}/c,q^{2+2m}c;q^2)_k (q^{-2m};q)_k (q^{3-6m};q^6)_k (q^3;q^3)_k",
        )
        .geo(-1, "q^{1+2m}", (-1, 1, 0)),
        Some("m+1"),
    )
}

fn v_corollaries() -> Vec<IdentityDef> {
    let v2_new = def(
        "cor-v2-new",
        Exact,
        &[M],
        "qa",
        "terminating closed form from the quadratic V transformation",
        local(
            "v2_new",
            tpl(
                "(1-q^{5k}a) (q^{-3-6m};q^2)_k (a,q^{-3m};q^3)_k (q^{2+3m}a;q^2)_{2k}",
                "(1-a) (q^2,q^{2+3m}a;q^2)_k (q^{6+6m}a;q^3)_k (q^{-1-3m};q)_k (q^{3-3m}a;q^6)_k",
            )
            .geo(-1, "q^{2+3m}", (-1, 1, 0)),
            Some("m+1"),
        ),
        ratio(
            "(q^{6+3m}a,q^{-3m}/a;q^3)_m (q^5,q^7;q^6)_m",
            "(q^2,q^4;q^3)_m (q^{9+3m}a,q^{3-3m}/a;q^6)_m",
        ),
    )
    .alt(v_normalized("m+1", "c=a/q, e=q^{-1-3m}"));
    let chu = def(
        "cor-chu-48d",
        Exact,
        &[N],
        "qa",
        "terminating closed form from the cubic V transformation, vanishing for odd n",
        local(
            "chu_48d",
            tpl(
                "(1-q^{5k}a) (a;q^2)_k (q^{1/2}a^{1/2};q^2)_{2k} (q^{3/2+3n}a^{3/2},q^{-3n};q^3)_k",
                "(1-a) (q^{2+3n}a,q^{1/2-3n}/a^{1/2};q^2)_k (q^{1/2}a^{1/2};q)_k (q^{9/2}a^{3/2};q^6)_k (q^3;q^3)_k",
            )
            .geo(-1, "q^{1/2}/a^{1/2}", (-1, 1, 0)),
            Some("n+1"),
        ),
        chu_48d_rhs("q^{3/2}a^{1/2}"),
    )
    .alt(v_normalized("n+1", "c=q^{1/2+3n}a^{3/2}, e=q^{-1-3n}"));
    let chu_wang = def(
        "cor-chu-wang-40",
        Exact,
        &[M],
        "qc",
        "terminating closed form from the cubic V transformation with a = q^{-1-4m}",
        chu_wang_lhs("q^{-1-6m}/c"),
        ratio("(q^4c;q^6)_m (q;q^2)_{2m} (q^2c;q^2)_m", "(q^3;q^6)_m (q^2c;q^2)_{2m} (q;q^2)_m"),
    )
    .alt(v_normalized("m+1", "a=q^{-1-4m}, e=q^{-2-6m}/c"));
    let nuova = def(
        "cor-nuova",
        Exact,
        &[M],
        "qa",
        "terminating closed form from the quartic V transformation",
        local(
            "nuova",
            tpl(
                "(1-q^{5k}a) (q^3/a^2;q^2)_k (q^{3+3m},q^{-3m};q^3)_k (a^2/q;q^2)_{2k}",
                "(1-a) (q^{2+3m}a,q^{-1-3m}a;q^2)_k (a^3;q^3)_k (q^2/a;q)_k (q^6;q^6)_k",
            )
            .geo(-1, "a", (-1, -1, 0)),
            Some("m+1"),
        ),
        ratio(
            "(a/q,qa;q)_m (q^{-3m}/a;q^2)_m (q^{-3m}a^3;q^6)_m",
            "(q^{-1-3m}a;q^2)_{2m} (a^3;q^3)_m (1/a;q^{-1})_m",
        ),
    )
    .alt(v_normalized("m+1", "c=q^{2+3m}, e=q^{-1-3m}"));
    vec![v2_new, chu, chu_wang, nuova]
}

/// `Σ_k (b, q^{2+2δ}/b; q²)_k / (q^{2+2δ}; q²)_{2k} · q^{4C(k,2)+(2+2δ)k}`.
fn ais_series() -> Expr {
    local(
        "ais",
        tpl("(b,q^{2+2δ}/b;q^2)_k", "(q^{2+2δ};q^2)_{2k}").geo(1, "q^{2+2δ}", (4, -4, 0)),
        None,
    )
}

fn nonterminating() -> Vec<IdentityDef> {
    let prop_quad = def(
        "prop-u-quadratic",
        Num,
        &[],
        "qabd",
        "infinite U-sum as quadratic companion plus a product times a limit series",
        infinite("U", ""),
        k_quad() * infinite("U_diamond", "")
            + ratio(
                "(q^2a/bd;q)_∞ (q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6)_∞",
                "(q^5a^2/b^2d^2;q^2)_∞ (q^3a/b,q^3a/d,q^6a/b^2d^2;q^3)_∞",
            ) * infinite("limit_u_quadratic", ""),
    );
    let spec_bd = def(
        "spec-bd-q2",
        Num,
        &[Delta],
        "qab",
        "infinite U-sum on bd = q^{2+2δ} as products times a quadratic series",
        infinite("U", ""),
        ratio(
            "(a,q^{1-2δ}a;q^3)_∞ (q^{3-6δ}a^2b,q^{5-4δ}a^2/b;q^6)_∞",
            "(q^3a/b,q^{1-2δ}ab;q^3)_∞ (q^{3-6δ}a^2,q^{5-4δ}a^2;q^6)_∞",
        ) * ais_series(),
    )
    .derived("d=q^{2+2δ}/b");
    let ais = def(
        "andrews-ismail-stanton",
        Num,
        &[Delta],
        "qb",
        "quadratic series summed as a product of base q^6 factorials",
        ais_series(),
        ratio("(q^{2+2δ}b,q^{4+4δ}/b;q^6)_∞", "(q^{2+2δ},q^{4+4δ};q^6)_∞"),
    );
    let rahman_x = def(
        "cor-rahman-x",
        Num,
        &[Delta],
        "qab",
        "nonterminating well-poised quartic summation, two cases of δ",
        local(
            "rahman_x",
            tpl(
                "(1-q^{5k+2δ}a) (b,q^{2+2δ}/b;q^2)_k (a;q)_k (q^{1+2δ}/a;q^3)_k (q^{1+2δ}a^2;q^6)_k",
                "(1-q^{2δ}a) (qa^2;q^2)_k (q^{2+2δ};q^2)_{2k} (qab,q^{3+2δ}a/b;q^3)_k",
            )
            .geo(-1, "a", (1, 1, 0)),
            None,
        ),
        ratio(
            "(qa,q^{3+2δ}a;q^3)_∞ (q^5a^2/b,q^{3-2δ}a^2b,q^{2+2δ}b,q^{4+4δ}/b;q^6)_∞",
            "(qab,q^{3+2δ}a/b;q^3)_∞ (q^5a^2,q^{3-2δ}a^2,q^{2+2δ},q^{4+4δ};q^6)_∞",
        ),
    );
    let prop_cubic = def(
        "prop-u-cubic",
        Num,
        &[],
        "qabd",
        "infinite U-sum as cubic companion plus a product times a limit series",
        infinite("U", ""),
        k_cubic() * infinite("U_triangle", "")
            + ratio(
                "(q^2a/bd;q)_∞ (b;q^2)_∞ (q^3a^2/bd,q^9a^2/b^2d^3;q^6)_∞",
                "(q^3a/d;q^3)_∞ (q^2/d,bd,q^5a^2/b^2d^2;q^2)_∞",
            ) * infinite("limit_u_cubic", ""),
    );
    let b_eq_a = def(
        "u-cubic-b-eq-a",
        Num,
        &[],
        "qad",
        "infinite U-sum at b = a as products times a base q^3 series",
        infinite("U", ""),
        ratio(
            "(q^2/d;q)_∞ (a;q^2)_∞ (q^3a/d,q^9/d^3;q^6)_∞",
            "(q^3a/d;q^3)_∞ (q^2/d,ad,q^5/d^2;q^2)_∞",
        ) * local("b_eq_a", tpl("(ad^2/q^3;q^3)_k", "(q^3;q^3)_k").geo(1, "1", (3, 3, 0)), None),
    )
    .derived("b=a");
    let qbd = def(
        "qbd-limit",
        Num,
        &[],
        "qa",
        "limiting q-Bailey-Daum type summation in base q^3",
        local("qbd", tpl("(a/q^3;q^3)_k", "(q^3;q^3)_k").geo(1, "1", (3, 3, 0)), None),
        ratio("(a;q^6)_∞", "(q^3;q^6)_∞"),
    );
    let rahman_y = def(
        "cor-rahman-y",
        Num,
        &[],
        "qad",
        "nonterminating well-poised quartic summation from the cubic transformation",
        local(
            "rahman_y",
            tpl(
                "(1-q^{5k}a) (a,d;q^2)_k (ad^2/q^3;q^3)_k (q^2/d;q)_k (q^3a/d;q^6)_k",
                "(1-a) (q^5/d^2;q^2)_k (q^3,q^3a/d;q^3)_k (ad;q^2)_{2k}",
            )
            .geo(-1, "q^3/d", (1, -1, 0)),
            None,
        ),
        ratio(
            "(q^2a,q^3/d;q^2)_∞ (ad^2,q^9/d^3;q^6)_∞",
            "(ad,q^5/d^2;q^2)_∞ (q^3,q^6a/d;q^6)_∞",
        ),
    );
    let h_series = |name: &str, b_arg: &str, b_den: &str| {
        local(
            name,
            tpl(&format!("(q^{{1/2}};q)_k ({b_arg};q^2)_k"), &format!("(q^2;q^2)_k ({b_den};q^3)_k"))
                .geo(-1, "q^{3/2}", (1, -1, 0)),
            None,
        )
    };
    let star = def(
        "eq-star",
        Num,
        &[],
        "qab",
        "infinite U-sum on d = q^{3/2}a/b as products times a base q series",
        infinite("U", ""),
        ratio("(b;q^2)_∞ (a;q^3)_∞ (q^{3/2}a;q^6)_∞", "(q^{3/2}a;q^2)_∞ (q^{3/2}b;q^3)_∞ (b;q^6)_∞")
            * h_series("star", "q^{3/2}a/b", "q^3a/b"),
    )
    .derived("d=q^{3/2}a/b");
    let q2f1 = def(
        "cor-q2f1",
        Num,
        &[],
        "qa",
        "nonterminating mixed-base series summed in closed form",
        h_series("q2f1", "q^{3/2}a", "q^3a"),
        ratio(
            "(q^{3/2}a;q^2)_∞ (q^{3/2};q^3)_∞ (q^6;q^6)_∞",
            "(q^2;q^2)_∞ (q^3a;q^3)_∞ (q^{3/2}a;q^6)_∞",
        ),
    );
    let stanton = def(
        "stanton-rr",
        Num,
        &[],
        "q",
        "Rogers-Ramanujan type sum with base q^4 denominator",
        local("stanton", tpl("(-q;q^2)_k", "(q^4;q^4)_k").geo(1, "1", (2, 4, 0)), None),
        ratio("(-q;q^2)_∞ (q^6,q,q^5;q^6)_∞", "(q^2;q^2)_∞"),
    );
    let qq2f1 = def(
        "cor-qq2f1",
        Num,
        &[],
        "qab",
        "nonterminating well-poised quartic series with two free parameters summed",
        local(
            "qq2f1",
            tpl(
                "(1-q^{5k}a) (b,q^{3/2}a/b;q^2)_k (a;q^3)_k (q^{1/2};q)_k (q^{3/2}a;q^6)_k",
                "(1-a) (q^2;q^2)_k (q^3a/b,q^{3/2}b;q^3)_k (q^{3/2}a;q^2)_{2k}",
            )
            .geo(-1, "1", (1, 2, 0)),
            None,
        ),
        ratio(
            "(b,q^{3/2}a/b;q^2)_∞ (q^3a,q^{3/2};q^3)_∞ (q^6,q^{3/2}a;q^6)_∞",
            "(q^2,q^{3/2}a;q^2)_∞ (q^3a/b,q^{3/2}b;q^3)_∞ (b,q^{3/2}a/b;q^6)_∞",
        ),
    );
    vec![prop_quad, spec_bd, ais, rahman_x, prop_cubic, b_eq_a, qbd, rahman_y, star, q2f1, stanton, qq2f1]
}

fn elliptic() -> Vec<IdentityDef> {
    let ell1 = def(
        "ell-1",
        Ell,
        &[M],
        "qa",
        "terminating elliptic sum with an even-m product and zero for odd m",
        local(
            "ell_1",
            tpl(
                "θ(q^{5k}a) [a,q^{2+m};q^2,p]_k [q^{-m};q,p]_k [q^{1-m}a;q^6,p]_k [q^{1+2m}a;q^3,p]_k",
                "θ(a) [q^{1-2m};q^2,p]_k [q^{2+m}a;q^2,p]_{2k} [q^3,q^{1-m}a;q^3,p]_k",
            )
            .geo(-1, "q^{-m}", (1, 1, 0)),
            Some("m+1"),
        ),
        Expr::even_split(
            M,
            N,
            ratio("[q^2a;q^2,p]_n [q^3;q^6,p]_n", "[q^{1+2n};q^2,p]_n [q^{4-2n}a;q^6,p]_n"),
            Expr::zero(),
        ),
    );
    let ell2 = def(
        "ell-2",
        Ell,
        &[M],
        "qa",
        "terminating elliptic sum with a product evaluation for every m",
        local(
            "ell_2",
            tpl(
                "θ(q^{5k}a) [a,q^{-2m};q^2,p]_k [q^{2+2m};q,p]_k [q^{3+2m}a;q^6,p]_k [q^{-3-4m}a;q^3,p]_k",
                "θ(a) [q^{5+4m};q^2,p]_k [q^{-2m}a;q^2,p]_{2k} [q^3,q^{3+2m}a;q^3,p]_k",
            )
            .geo(-1, "q^{3+2m}", (1, -1, 0)),
            Some("m+1"),
        ),
        ratio(
            "[q^2a;q^2,p]_m [q^5;q^2,p]_{2m} [q^{-4m}a;q^6,p]_m",
            "[q^3;q^2,p]_m [q^{-2m}a;q^2,p]_{2m} [q^9;q^6,p]_m",
        ),
    );
    let ell3 = def(
        "ell-3",
        Ell,
        &[M],
        "qa",
        "elliptic extension of the quartic V closed form",
        local(
            "ell_3",
            tpl(
                "θ(q^{5k}a) [q^3/a^2;q^2,p]_k [a^2/q;q^2,p]_{2k} [q^{3+3m},q^{-3m};q^3,p]_k",
                "θ(a) [q^{2+3m}a,q^{-1-3m}a;q^2,p]_k [q^2/a;q,p]_k [q^6;q^6,p]_k [a^3;q^3,p]_k",
            )
            .geo(-1, "a", (-1, -1, 0)),
            Some("m+1"),
        ),
        ratio(
            "[a/q,qa;q,p]_m [q^{-3m}/a;q^2,p]_m [q^{-3m}a^3;q^6,p]_m",
            "[q^{-1-3m}a;q^2,p]_{2m} [a^3;q^3,p]_m [1/a;q^{-1},p]_m",
        ),
    );
    vec![ell1, ell2, ell3]
}

fn fixtures() -> Vec<IdentityDef> {
    let mut out = Vec::new();
    let mut corrupted = theorems().remove(0);
    corrupted.id = "fixture-corrupted-thm-4u2".into();
    corrupted.anchor = "deliberately corrupted: one factor of the constant prefactor altered";
    corrupted.rhs = ratio("(1-q^3a/bd) (1-bd/q^2) (1-bd/q^3)", "(1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-b^2d^2/q^6a)")
        * (finite("U_diamond", "") - finite("U_diamond", SHIFT_U_N) * r_base("u_quad"));
    out.push(corrupted.as_fixture());

    let unsigned = SeriesDef::new("U_star_unsigned", builtin("U_star").expect("catalog name").template.clone().geo(-1, "1", (0, 0, 0)), SeriesRange::Partial(Affine::var(M)));
    let mut iter = recurrences().into_iter().find(|d| d.id == "iter-u-q1").expect("registered");
    iter.id = "fixture-iter-u-q1-unsigned".into();
    iter.anchor = "typo variant: m-step sum with (qa/bd)^k in place of (-qa/bd)^k";
    iter.rhs = finite("U", "a=q^ma, b=q^{4m}b, d=q^{-2m}d") * w_quartic()
        + k_quartic()
            * Expr::sum_k("m", Expr::term(unsigned.template.clone()) * one_minus_r_shifted("u_quartic"));
    out.push(iter.as_fixture());

    let mut v4 = theorems().remove(5);
    v4.id = "fixture-thm-4v4-n-subscript".into();
    v4.anchor = "typo variant: base q^3 factors of the weight indexed by n instead of m";
    v4.lhs = finite("V", "") - finite("V", "a=q^ma, c=q^{3m}c, e=q^{-3m}e") * wv_quartic("n");
    out.push(v4.as_fixture());

    let mut chu = v_corollaries().remove(1);
    chu.id = "fixture-cor-chu-48d-a-cubed".into();
    chu.anchor = "typo variant: (q^{3/2}a^{3/2};q^2)_{3m} in the even-n denominator";
    chu.rhs = chu_48d_rhs("q^{3/2}a^{3/2}");
    chu.alt_lhs = None;
    out.push(chu.as_fixture());

    let mut cw = v_corollaries().remove(2);
    cw.id = "fixture-cor-chu-wang-40-missing-c".into();
    cw.anchor = "typo variant: (qc,q^{-1-6m};q^3)_k without the 1/c";
    cw.lhs = chu_wang_lhs("q^{-1-6m}");
    cw.alt_lhs = None;
    out.push(cw.as_fixture());
    out
}

fn build() -> Vec<IdentityDef> {
    let mut all = theorems();
    all.extend(recurrences());
    all.extend(u_special());
    all.extend(v_corollaries());
    all.extend(nonterminating());
    all.extend(elliptic());
    all
}

/// Every catalog identity, in catalog order.
pub fn registry() -> &'static [IdentityDef] {
    static REGISTRY: OnceLock<Vec<IdentityDef>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

/// Known-wrong variants used to exercise mismatch reporting.
pub fn fixture_registry() -> &'static [IdentityDef] {
    static FIXTURES: OnceLock<Vec<IdentityDef>> = OnceLock::new();
    FIXTURES.get_or_init(fixtures)
}
