//! The six difference pairs, stored beside their closed forms.
//!
//! Every string is in the product notation of [`crate::series::notation`]. For each pair:
//! - `a`, `b`: the sequences `A_k`, `B_k`
//! - `d`: the constant denominator shared by `∇A_k` and the reformulated sum
//! - `nabla_a`, `delta_b`: closed forms of `A_k - A_{k-1}` and `B_{k+1} - B_k`
//! - `r_base`, `r_lin`: `R(n)` is the linear ratio `r_lin` times the `n`-only product `r_base`
//! - `iv`, `v`: prefactors of the reformulated sum and of the shifted sum
//! - `r_shift`, `r_first`, `r_sep`: the shifted parameters for the R-split and the two
//!   explicit forms of the shifted `R`

pub(super) struct PairSpec {
    pub name: &'static str,
    pub series: &'static str,
    pub a: (&'static str, &'static str),
    pub b: (&'static str, &'static str),
    pub d: &'static str,
    pub varpi: (&'static str, &'static str),
    pub nabla_a: (&'static str, &'static str),
    pub delta_b: (&'static str, &'static str),
    pub r_lin: (&'static str, &'static str),
    pub r_base: (&'static str, &'static str),
    pub iv: &'static str,
    pub v_subst: &'static str,
    pub v: (&'static str, &'static str),
    pub r_shift: &'static str,
    pub r_first: (&'static str, &'static str),
    pub r_sep: (&'static str, &'static str),
    /// Extra geometric base `x` contributing `x^k` to `r_sep`.
    pub r_sep_geo: Option<&'static str>,
}

pub(super) const SPECS: [PairSpec; 6] = [
    PairSpec {
        name: "u_quad",
        series: "U",
        a: (
            "(q^3a/bd,q^5a/bd;q)_k (b^3d^3/q^7a^2;q^2)_k (q^9a^2/bd;q^6)_k",
            "(bd,q^2bd;q^4)_k (q^12a^3/b^3d^3;q^3)_k (bd/q^4a;q^{-1})_k",
        ),
        b: (
            "(b,d;q^2)_k (b^2d^2/q^6a,q^12a^3/b^3d^3;q^3)_k",
            "(q^3a/b,q^3a/d;q^3)_k (q^9a^2/b^2d^2,b^3d^3/q^9a^2;q^2)_k",
        ),
        d: "(1-q^2a/bd) (1-q^4a/bd) (1-q^3a^2/bd) (1-q^9a^2/b^3d^3)",
        varpi: (
            "a (1-q^2/bd) (1-q^4/bd) (1-q^3a/bd) (1-q^9a^3/b^3d^3)",
            "(1-q^2a/bd) (1-q^4a/bd) (1-q^3a^2/bd) (1-q^9a^2/b^3d^3)",
        ),
        nabla_a: (
            "(1-q^{5k}a) (1-q^{6-3k}a/b^2d^2) (1-q^{5+2k}a^2/b^2d^2) (1-q^{7+2k}a^2/b^2d^2) \
             (q^2a/bd,q^4a/bd;q)_k (b^3d^3/q^9a^2;q^2)_k (q^3a^2/bd;q^6)_k q^{2k}",
            "(bd,q^2bd;q^4)_k (q^12a^3/b^3d^3;q^3)_k (bd/q^4a;q^{-1})_k",
        ),
        delta_b: (
            "-1 (1-q^{3+5k}a) (1-q^{3+k}a/bd) (1-q^9a^2/b^2d^3) (1-q^9a^2/b^3d^2) \
             (b,d;q^2)_k (b^2d^2/q^6a,q^12a^3/b^3d^3;q^3)_k q^{2k}",
            "(1-q^3a/b) (1-q^3a/d) (1-q^9a^2/b^2d^2) (1-q^9a^2/b^3d^3) \
             (q^11a^2/b^2d^2,b^3d^3/q^7a^2;q^2)_k (q^6a/b,q^6a/d;q^3)_k",
        ),
        r_lin: ("(1-q^{9+3n}a^3/b^3d^3)", "(1-q^9a^3/b^3d^3)"),
        r_base: (
            "(q^3a^2/bd;q^6)_n (b,d;q^2)_n (q^2a/bd,q^4a/bd;q)_n (b^2d^2/q^6a;q^3)_n",
            "(bd/q^3a;q^{-1})_n (q^9a^2/b^2d^2;q^2)_n (bd/q^4;q^2)_{2n} (q^3a/b,q^3a/d;q^3)_n",
        ),
        iv: "(1-q^5a^2/b^2d^2) (1-q^7a^2/b^2d^2) (1-q^6a/b^2d^2)",
        v_subst: "a=q^3a",
        v: (
            "(1-q^3a/bd) (1-q^9a^2/b^2d^3) (1-q^9a^2/b^3d^2)",
            "(1-q^3a/b) (1-q^3a/d) (1-q^9a^2/b^2d^2) (1-q^9a^2/b^3d^3)",
        ),
        r_shift: "a=q^{3k}a",
        r_first: (
            "(1-q^{9+3n+9k}a^3/b^3d^3) (b,d;q^2)_n (q^{2+3k}a/bd,q^{4+3k}a/bd;q)_n \
             (q^{-6-3k}b^2d^2/a;q^3)_n (q^{3+6k}a^2/bd;q^6)_n",
            "(1-q^{9+9k}a^3/b^3d^3) (q^{9+6k}a^2/b^2d^2;q^2)_n (bd/q^4;q^2)_{2n} \
             (q^{3+3k}a/b,q^{3+3k}a/d;q^3)_n (q^{-3-3k}bd/a;q^{-1})_n",
        ),
        r_sep: (
            "(1-q^{9+3n+9k}a^3/b^3d^3) (q^3a/b,q^3a/d,q^9a/b^2d^2;q^3)_k (q^{3+6n}a^2/bd;q^6)_k \
             (q^9a^2/b^2d^2;q^2)_{3k} (q^{2+n}a/bd,q^{4+n}a/bd,q^{6+n}a/bd;q^3)_k",
            "(1-q^{9+9k}a^3/b^3d^3) (q^2a/bd,q^4a/bd,q^6a/bd;q^3)_k (q^3a^2/bd;q^6)_k \
             (q^{9+2n}a^2/b^2d^2;q^2)_{3k} (q^{3+3n}a/b,q^{3+3n}a/d,q^{9-3n}a/b^2d^2;q^3)_k",
        ),
        r_sep_geo: None,
    },
    PairSpec {
        name: "u_cubic",
        series: "U",
        a: (
            "(q^3a/bd,bd^2/q^4a;q)_k (q^2b;q^2)_k (q^9a^2/bd;q^6)_k",
            "(q^2bd,q^9a^2/bd^2;q^4)_k (q^3a/b;q^3)_k (bd/q^4a;q^{-1})_k",
        ),
        b: (
            "(q^4a/bd;q)_k (d/q^2;q^2)_k (b^2d^2/q^3a;q^3)_k (q^9a^2/bd^2;q^4)_k",
            "(bd;q^4)_k (q^6a/d;q^3)_k (q^7a^2/b^2d^2;q^2)_k (bd^2/q^5a;q)_k",
        ),
        d: "(1-q^2a/bd) (1-q^5a/bd^2) (1-b) (1-q^3a^2/bd)",
        varpi: (
            "(1-bd/q^2) (1-q^5a^2/bd^2) (1-a/b) (1-bd/q^3a)",
            "(1-q^2a/bd) (1-bd^2/q^5a) (1-b) (1-q^3a^2/bd)",
        ),
        nabla_a: (
            "(1-q^{5k}a) (1-q^{2-2k}/d) (1-q^{5+2k}a^2/b^2d^2) (1-q^{3+3k}a/d) \
             (q^2a/bd,bd^2/q^5a;q)_k (b;q^2)_k (q^3a^2/bd;q^6)_k q^k",
            "(q^2bd,q^9a^2/bd^2;q^4)_k (q^3a/b;q^3)_k (bd/q^4a;q^{-1})_k",
        ),
        delta_b: (
            "-1 (1-q^{4+5k}a) (1-q^{3+k}a/bd) (1-q^{2+2k}b) (1-q^9a^2/b^2d^3) \
             (q^4a/bd;q)_k (d/q^2;q^2)_k (b^2d^2/q^3a;q^3)_k (q^9a^2/bd^2;q^4)_k q^k",
            "(1-q^5a/bd^2) (1-q^7a^2/b^2d^2) (1-q^6a/d) (1-bd) \
             (bd^2/q^4a;q)_k (q^9a^2/b^2d^2;q^2)_k (q^9a/d;q^3)_k (q^4bd;q^4)_k",
        ),
        r_lin: ("(1-q^{5+4n}a^2/bd^2)", "(1-q^5a^2/bd^2)"),
        r_base: (
            "(q^2a/bd,q^4a/bd;q)_n (b,d/q^2;q^2)_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n",
            "(bd/q^2;q^2)_{2n} (q^7a^2/b^2d^2;q^2)_n (a/b,q^6a/d;q^3)_n (bd/q^3a;q^{-1})_n",
        ),
        iv: "(1-q^2/d) (1-q^3a/d) (1-q^5a^2/b^2d^2)",
        v_subst: "a=q^4a, b=q^4b, d=d/q^2",
        v: (
            "(1-q^2b) (1-q^3a/bd) (1-q^9a^2/b^2d^3)",
            "(1-bd) (1-q^6a/d) (1-q^5a/bd^2) (1-q^7a^2/b^2d^2)",
        ),
        r_shift: "a=q^{4k}a, b=q^{4k}b, d=q^{-2k}d",
        r_first: (
            "(1-q^{5+4n+8k}a^2/bd^2) (q^{4k}b,q^{-2-2k}d;q^2)_n (q^{2+2k}a/bd,q^{4+2k}a/bd;q)_n \
             (b^2d^2/q^3a;q^3)_n (q^{3+6k}a^2/bd;q^6)_n",
            "(1-q^{5+8k}a^2/bd^2) (q^{7+4k}a^2/b^2d^2;q^2)_n (q^{2k-2}bd;q^2)_{2n} \
             (a/b,q^{6+6k}a/d;q^3)_n (q^{-3-2k}bd/a;q^{-1})_n",
        ),
        r_sep: (
            "(1-q^{5+4n+8k}a^2/bd^2) (q^{2+n}a/bd,q^{5+n}a/bd,q^4/d,bd/q^2;q^2)_k (q^6a/d;q^3)_{2k} \
             (q^{2n}b,q^7a^2/b^2d^2;q^2)_{2k} (q^{3+6n}a^2/bd;q^6)_k",
            "(1-q^{5+8k}a^2/bd^2) (q^2a/bd,q^5a/bd,q^{4-2n}/d,q^{4n-2}bd;q^2)_k (q^{6+3n}a/d;q^3)_{2k} \
             (b,q^{7+2n}a^2/b^2d^2;q^2)_{2k} (q^3a^2/bd;q^6)_k",
        ),
        r_sep_geo: None,
    },
    PairSpec {
        name: "u_quartic",
        series: "U",
        a: (
            "(q^3a/bd;q)_k (q^2b;q^2)_k (b^2d^2/a;q^3)_k (q^5a^2/b^2d;q^4)_k",
            "(q^2bd;q^4)_k (q^3a/b;q^3)_k (q^5a^2/b^2d^2;q^2)_k (b^2d/a;q)_k",
        ),
        b: (
            "(qa/bd,b^2d/a;q)_k (d/q^2;q^2)_k (q^3a^2/bd;q^6)_k",
            "(bd,qa^2/b^2d;q^4)_k (q^3a/d;q^3)_k (bd/q^2a;q^{-1})_k",
        ),
        d: "(1-b) (1-q^2a/bd) (1-qa^2/b^2d) (1-q^3a/b^2d^2)",
        varpi: (
            "(1-b^2d/qa) (1-b^2d^2/q^3a^2) (1-b/a) (1-bd/q^2)",
            "(1-bd/q^2a) (1-b) (1-b^2d^2/q^3a) (1-b^2d/qa^2)",
        ),
        nabla_a: (
            "(1-q^{5k}a) (1-q^{2-2k}/d) (1-q^{1+k}a/bd) (1-q^3a^2/b^3d^2) \
             (q^2a/bd;q)_k (b;q^2)_k (b^2d^2/q^3a;q^3)_k (qa^2/b^2d;q^4)_k q^{3k}",
            "(b^2d/a;q)_k (q^5a^2/b^2d^2;q^2)_k (q^3a/b;q^3)_k (q^2bd;q^4)_k",
        ),
        delta_b: (
            "-1 (1-q^{1+5k}a) (1-q^{3k}a/b) (1-q^{2+2k}b) (1-q^{3+2k}a^2/b^2d^2) \
             (qa/bd,b^2d/a;q)_k (d/q^2;q^2)_k (q^3a^2/bd;q^6)_k",
            "(1-bd) (1-qa^2/b^2d) (1-q^3a/d) (1-q^2a/bd) \
             (q^4bd,q^5a^2/b^2d;q^4)_k (q^6a/d;q^3)_k (bd/q^3a;q^{-1})_k q^k",
        ),
        r_lin: ("(1-q^{n-1}b^2d/a)", "(1-b^2d/qa)"),
        r_base: (
            "(qa/bd,q^2a/bd;q)_n (b,d/q^2;q^2)_n (b^2d^2/q^3a;q^3)_n (q^3a^2/bd;q^6)_n",
            "(bd/q^2;q^2)_{2n} (q^3a^2/b^2d^2;q^2)_n (a/b,q^3a/d;q^3)_n (bd/q^2a;q^{-1})_n",
        ),
        iv: "(1-q^2/d) (1-qa/bd) (1-q^3a^2/b^3d^2)",
        v_subst: "a=qa, b=q^4b, d=d/q^2",
        v: (
            "(1-b/a) (1-q^2b) (1-b^2d^2/q^3a^2)",
            "(1-bd) (1-b^2d/qa^2) (1-q^3a/d) (1-bd/q^2a)",
        ),
        r_shift: "a=q^ka, b=q^{4k}b, d=q^{-2k}d",
        r_first: (
            "(1-q^{n+5k-1}b^2d/a) (q^{4k}b,q^{-2-2k}d;q^2)_n (q^{1-k}a/bd,q^{2-k}a/bd;q)_n \
             (q^{3k-3}b^2d^2/a;q^3)_n (q^3a^2/bd;q^6)_n",
            "(1-q^{5k-1}b^2d/a) (q^{3-2k}a^2/b^2d^2;q^2)_n (q^{2k-2}bd;q^2)_{2n} \
             (q^{-3k}a/b,q^{3+3k}a/d;q^3)_n (q^{k-2}bd/a;q^{-1})_n",
        ),
        r_sep: (
            "(1-q^{n+5k-1}b^2d/a) (q^{3n-3}b^2d^2/a,q^{3-3n}b/a,q^3a/d;q^3)_k (bd/a;q)_k \
             (q^{2n}b;q^2)_{2k} (q^4/d,bd/q^2,q^{-1-2n}b^2d^2/a^2;q^2)_k",
            "(1-q^{5k-1}b^2d/a) (b^2d^2/q^3a,q^3b/a,q^{3+3n}a/d;q^3)_k (q^{-n}bd/a;q)_k \
             (b;q^2)_{2k} (q^{4-2n}/d,q^{4n-2}bd,b^2d^2/qa^2;q^2)_k",
        ),
        r_sep_geo: Some("q^n"),
    },
    PairSpec {
        name: "v_quad",
        series: "V",
        a: (
            "(q^3c^2e^2/a^2,a^4/qc^3e^3;q^2)_k (q^4c,q^4e;q^3)_k",
            "(q^2a^3/c^2e^2,q^6c^3e^3/a^3;q^3)_k (qa/c,qa/e;q^2)_k",
        ),
        b: (
            "(q^6c^3e^3/a^3;q^3)_k (a^2/ce;q^2)_{2k} (a/q^2ce;q^{-1})_k",
            "(a^4/q^3c^3e^3;q^2)_k (qce/a,q^3ce/a;q)_k (q^5ce;q^6)_k",
        ),
        d: "(1-qc) (1-qe) (1-qc^2e^2/a^2) (1-q^3c^3e^3/a^4)",
        varpi: (
            "(1-a/qc) (1-a/qe) (1-a^3/qc^2e^2) (1-q^3c^3e^3/a^3)",
            "(1-qc) (1-qe) (1-qc^2e^2/a^2) (1-a^4/q^3c^3e^3)",
        ),
        nabla_a: (
            "(1-q^{5k}a) (1-q^{2+k}ce/a) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3) \
             (qc^2e^2/a^2,a^4/q^3c^3e^3;q^2)_k (qc,qe;q^3)_k q^{2k}",
            "(qa/c,qa/e;q^2)_k (q^2a^3/c^2e^2,q^6c^3e^3/a^3;q^3)_k",
        ),
        delta_b: (
            "-1 (1-q^{3+5k}a) (1-q^{1-3k}c^2e^2/a^3) (1-q^{3+2k}c^2e^2/a^2) (1-q^{5+2k}c^2e^2/a^2) \
             (q^6c^3e^3/a^3;q^3)_k (a^2/ce;q^2)_{2k} (a/q^2ce;q^{-1})_k q^{2k}",
            "(1-q^3c^3e^3/a^4) (1-qce/a) (1-q^3ce/a) (1-q^5ce) \
             (a^4/qc^3e^3;q^2)_k (q^2ce/a,q^4ce/a;q)_k (q^11ce;q^6)_k",
        ),
        r_lin: ("(1-q^{3+3n}c^3e^3/a^3)", "(1-q^3c^3e^3/a^3)"),
        r_base: (
            "(a^2/ce;q^2)_{2n} (qc^2e^2/a^2;q^2)_n (qc,qe;q^3)_n (a/q^2ce;q^{-1})_n",
            "(qce/a,q^3ce/a;q)_n (a/qc,a/qe;q^2)_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n",
        ),
        iv: "(1-q^2ce/a) (1-q^2c^2e^3/a^3) (1-q^2c^3e^2/a^3)",
        v_subst: "a=q^3a, c=q^3c, e=q^3e",
        v: (
            "(1-qc^2e^2/a^3) (1-q^3c^2e^2/a^2) (1-q^5c^2e^2/a^2)",
            "(1-q^3c^3e^3/a^4) (1-qce/a) (1-q^3ce/a) (1-q^5ce)",
        ),
        r_shift: "a=q^{3k}a, c=q^{3k}c, e=q^{3k}e",
        r_first: (
            "(1-q^{3+3n+9k}c^3e^3/a^3) (q^{1+6k}c^2e^2/a^2;q^2)_n (a^2/ce;q^2)_{2n} \
             (q^{1+3k}c,q^{1+3k}e;q^3)_n (q^{-2-3k}a/ce;q^{-1})_n",
            "(1-q^{3+9k}c^3e^3/a^3) (a/qc,a/qe;q^2)_n (q^{1+3k}ce/a,q^{3+3k}ce/a;q)_n \
             (q^{-1-3k}a^3/c^2e^2;q^3)_n (q^{5+6k}ce;q^6)_n",
        ),
        r_sep: (
            "(1-q^{3+3n+9k}c^3e^3/a^3) (q^{1+2n}c^2e^2/a^2;q^2)_{3k} (q^5ce;q^6)_k \
             (q^{1+3n}c,q^{1+3n}e,qce/a,q^3ce/a,q^5ce/a,q^{4-3n}c^2e^2/a^3;q^3)_k",
            "(1-q^{3+9k}c^3e^3/a^3) (qc^2e^2/a^2;q^2)_{3k} (q^{5+6n}ce;q^6)_k \
             (qc,qe,q^{1+n}ce/a,q^{3+n}ce/a,q^{5+n}ce/a,q^4c^2e^2/a^3;q^3)_k",
        ),
        r_sep_geo: None,
    },
    PairSpec {
        name: "v_cubic",
        series: "V",
        a: (
            "(a^2/qc^2e;q)_k (q^3c^2e^2/a^2;q^2)_k (q^4c;q^3)_k (q^4a^2/ce;q^4)_k",
            "(q^6c^2e/a;q^4)_k (q^2a^3/c^2e^2;q^3)_k (qa/c;q^2)_k (qce/a;q)_k",
        ),
        b: (
            "(q^2a^2/ce,q^6c^2e/a;q^4)_k (qe;q^3)_k (a/qce;q^{-1})_k",
            "(q^2ce/a,a^2/q^2c^2e;q)_k (q^3a/e;q^2)_k (q^5ce;q^6)_k",
        ),
        d: "(1-q^2c^2e/a^2) (1-qc^2e^2/a^2) (1-qc) (1-a^2/ce)",
        varpi: (
            "(1-ce/a) (1-a/qc) (1-a^3/qc^2e^2) (1-q^2c^2e/a)",
            "(1-a^2/q^2c^2e) (1-qc^2e^2/a^2) (1-qc) (1-a^2/ce)",
        ),
        nabla_a: (
            "(1-q^{5k}a) (1-q^{1+k}ce/a) (1-q^{1+2k}a/e) (1-q^2c^3e^2/a^3) \
             (a^2/q^2c^2e;q)_k (qc^2e^2/a^2;q^2)_k (qc;q^3)_k (a^2/ce;q^4)_k q^k",
            "(qce/a;q)_k (qa/c;q^2)_k (q^2a^3/c^2e^2;q^3)_k (q^6c^2e/a;q^4)_k",
        ),
        delta_b: (
            "-1 (1-q^{4+5k}a) (1-q^{1-2k}c/a) (1-q^{3+2k}c^2e^2/a^2) (1-q^{4+3k}c) \
             (q^2a^2/ce,q^6c^2e/a;q^4)_k (qe;q^3)_k (a/qce;q^{-1})_k q^k",
            "(1-q^2ce/a) (1-q^2c^2e/a^2) (1-q^3a/e) (1-q^5ce) \
             (q^3ce/a,a^2/qc^2e;q)_k (q^5a/e;q^2)_k (q^11ce;q^6)_k",
        ),
        r_lin: ("(1-q^{2+4n}c^2e/a)", "(1-q^2c^2e/a)"),
        r_base: (
            "(a^2/ce;q^2)_{2n} (qc^2e^2/a^2;q^2)_n (qc,qe;q^3)_n (a/qce;q^{-1})_n",
            "(ce/a,q^2ce/a;q)_n (a/qc,q^3a/e;q^2)_n (a^3/qc^2e^2;q^3)_n (q^5ce;q^6)_n",
        ),
        iv: "(1-qce/a) (1-qa/e) (1-q^2c^3e^2/a^3)",
        v_subst: "a=q^4a, c=q^6c",
        v: (
            "(1-qc/a) (1-q^3c^2e^2/a^2) (1-q^4c)",
            "(1-q^2ce/a) (1-q^2c^2e/a^2) (1-q^3a/e) (1-q^5ce)",
        ),
        r_shift: "a=q^{4k}a, c=q^{6k}c",
        r_first: (
            "(1-q^{2+4n+8k}c^2e/a) (q^{1+4k}c^2e^2/a^2;q^2)_n (q^{2k}a^2/ce;q^2)_{2n} \
             (q^{1+6k}c,qe;q^3)_n (q^{-1-2k}a/ce;q^{-1})_n",
            "(1-q^{2+8k}c^2e/a) (q^{-1-2k}a/c,q^{3+4k}a/e;q^2)_n (q^{2k}ce/a,q^{2+2k}ce/a;q)_n \
             (a^3/qc^2e^2;q^3)_n (q^{5+6k}ce;q^6)_n",
        ),
        r_sep: (
            "(1-q^{2+4n+8k}c^2e/a) (ce/a,q^3ce/a,q^{4n}a^2/ce,q^{3-2n}c/a;q^2)_k (q^{1+3n}c;q^3)_{2k} \
             (q^5ce;q^6)_k (q^{1+2n}c^2e^2/a^2,q^3a/e;q^2)_{2k}",
            "(1-q^{2+8k}c^2e/a) (q^nce/a,q^{n+3}ce/a,a^2/ce,q^3c/a;q^2)_k (qc;q^3)_{2k} \
             (q^{5+6n}ce;q^6)_k (qc^2e^2/a^2,q^{3+2n}a/e;q^2)_{2k}",
        ),
        r_sep_geo: None,
    },
    PairSpec {
        name: "v_quartic",
        series: "V",
        a: (
            "(q^4a^2/ce,q^2ce^2/a;q^4)_k (q^4c;q^3)_k (a/ce;q^{-1})_k",
            "(qce/a,q^3a^2/ce^2;q)_k (qa/c;q^2)_k (q^5ce;q^6)_k",
        ),
        b: (
            "(q^3a^2/ce^2;q)_k (c^2e^2/qa^2;q^2)_k (e/q^2;q^3)_k (q^2a^2/ce;q^4)_k",
            "(ce^2/q^2a;q^4)_k (q^2a^3/c^2e^2;q^3)_k (q^3a/e;q^2)_k (ce/qa;q)_k",
        ),
        d: "(1-a^2/ce) (1-ce^2/q^2a) (1-qc) (1-ce/qa)",
        varpi: (
            "(1-ce/a) (1-q^2a^2/ce^2) (1-a/qc) (1-ce/q)",
            "(1-a^2/ce) (1-ce^2/q^2a) (1-qc) (1-qa/ce)",
        ),
        nabla_a: (
            "(1-q^{5k}a) (1-q^{3k-2}e) (1-q^{1+2k}a/e) (1-q^{2k-1}c^2e^2/a^2) \
             (a^2/ce,ce^2/q^2a;q^4)_k (qc;q^3)_k (qa/ce;q^{-1})_k",
            "(qce/a,q^3a^2/ce^2;q)_k (qa/c;q^2)_k (q^5ce;q^6)_k q^k",
        ),
        delta_b: (
            "-1 (1-q^{1+5k}a) (1-q^kce/a) (1-q^{2k-1}a/c) (1-q^4a^3/c^2e^3) \
             (q^3a^2/ce^2;q)_k (c^2e^2/qa^2;q^2)_k (e/q^2;q^3)_k (q^2a^2/ce;q^4)_k q^k",
            "(1-qa/ce) (1-q^3a/e) (1-q^2a^3/c^2e^2) (1-ce^2/q^2a) \
             (ce/a;q)_k (q^5a/e;q^2)_k (q^5a^3/c^2e^2;q^3)_k (q^2ce^2/a;q^4)_k",
        ),
        r_lin: ("(1-q^{2+n}a^2/ce^2)", "(1-q^2a^2/ce^2)"),
        r_base: (
            "(a^2/ce;q^2)_{2n} (c^2e^2/qa^2;q^2)_n (qc,e/q^2;q^3)_n (qa/ce;q^{-1})_n",
            "(ce/qa,ce/a;q)_n (a/qc,q^3a/e;q^2)_n (q^2a^3/c^2e^2;q^3)_n (ce/q;q^6)_n",
        ),
        iv: "(1-e/q^2) (1-qa/e) (1-c^2e^2/qa^2)",
        v_subst: "a=qa, c=q^3c, e=e/q^3",
        v: (
            "(1-ce/a) (1-a/qc) (1-q^4a^3/c^2e^3)",
            "(1-qa/ce) (1-q^3a/e) (1-q^2a^3/c^2e^2) (1-ce^2/q^2a)",
        ),
        r_shift: "a=q^ka, c=q^{3k}c, e=q^{-3k}e",
        r_first: (
            "(1-q^{2+n+5k}a^2/ce^2) (q^{-1-2k}c^2e^2/a^2;q^2)_n (q^{2k}a^2/ce;q^2)_{2n} \
             (q^{1+3k}c,q^{-2-3k}e;q^3)_n (q^{1+k}a/ce;q^{-1})_n",
            "(1-q^{2+5k}a^2/ce^2) (q^{-1-2k}a/c,q^{3+4k}a/e;q^2)_n (q^{-1-k}ce/a,q^{-k}ce/a;q)_n \
             (q^{2+3k}a^3/c^2e^2;q^3)_n (ce/q;q^6)_n",
        ),
        r_sep: (
            "(1-q^{2+n+5k}a^2/ce^2) (q^3a^2/c^2e^2,q^{4n}a^2/ce,q^{3-2n}c/a;q^2)_k (q^{1-n}a/ce;q)_k \
             (q^3a/e;q^2)_{2k} (q^{1+3n}c,q^5/e,q^2a^3/c^2e^2;q^3)_k",
            "(1-q^{2+5k}a^2/ce^2) (q^{3-2n}a^2/c^2e^2,a^2/ce,q^3c/a;q^2)_k (qa/ce;q)_k \
             (q^{3+2n}a/e;q^2)_{2k} (qc,q^{5-3n}/e,q^{2+3n}a^3/c^2e^2;q^3)_k",
        ),
        r_sep_geo: Some("q^{-n}"),
    },
];
