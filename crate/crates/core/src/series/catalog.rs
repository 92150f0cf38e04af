//! The built-in series catalog.
//!
//! - `F`, `G`, `U`, `V`: the four quartic partial sums, `n` terms
//! - `U_diamond`, `U_triangle`, `U_star`: the quadratic, cubic and quartic companion sums of
//!   `U`, `m` terms
//! - `V_diamond`, `V_triangle`, `V_star`: the same for `V`
//! - `limit_u_quadratic`, `limit_u_cubic`: the two nonterminating limit series that appear
//!   when `n → ∞` in the quadratic and cubic transformations of `U`

use std::sync::{Arc, OnceLock};

use super::notation::tpl;
use super::sum::{SeriesDef, SeriesRange};
use crate::error::{QError, QResult};
use crate::scalar_qpoch::{Affine, MetaVar};

/// Catalog names in display order.
pub const BUILTIN_NAMES: [&str; 12] = [
    "F",
    "G",
    "U",
    "V",
    "U_diamond",
    "U_triangle",
    "U_star",
    "V_diamond",
    "V_triangle",
    "V_star",
    "limit_u_quadratic",
    "limit_u_cubic",
];

fn build() -> Vec<Arc<SeriesDef>> {
    let n = SeriesRange::Partial(Affine::var(MetaVar::N));
    let m = SeriesRange::Partial(Affine::var(MetaVar::M));
    vec![
        SeriesDef::new(
            "F",
            tpl(
                "(1-q^{5k}a) (b,d;q)_k (qa/bd;q)_{3k} (b^2d^2/q^2;q^4)_k q^k",
                "(q^3a/b^2d^2;q)_k (bd,bd/q,qbd;q^2)_k (q^4a/b,q^4a/d;q^4)_k",
            ),
            n,
        ),
        SeriesDef::new(
            "G",
            tpl(
                "(1-q^{5k}a) (c^2e^2/q^2a^3;q)_k (qa^2/ce,q^2a^2/ce,q^3a^2/ce;q^2)_k (c,e;q^4)_k q^k",
                "(qa/c,qa/e;q)_k (ce/a;q)_{3k} (q^6a^4/c^2e^2;q^4)_k",
            ),
            n,
        ),
        SeriesDef::new("U", u_template(), n),
        SeriesDef::new("V", v_template(), n),
        SeriesDef::new(
            "U_diamond",
            tpl(
                "(1-q^{9+9k}a^3/b^3d^3) (q^2a/bd,q^4a/bd,q^6a/bd;q^3)_k \
                 (q^3a^2/bd,q^9a^2/b^2d^3,q^9a^2/b^3d^2;q^6)_k q^{3k}",
                "(q^3a/b,q^3a/d,q^9a/b^2d^2;q^3)_k (q^9a^2/b^2d^2,q^11a^2/b^2d^2,q^13a^2/b^2d^2;q^6)_k",
            ),
            m,
        ),
        SeriesDef::new(
            "U_triangle",
            tpl(
                "(1-q^{5+8k}a^2/bd^2) (q^3a^2/bd,q^9a^2/b^2d^3;q^6)_k (b;q^2)_{2k} (q^2a/bd,q^5a/bd;q^2)_k q^{2k}",
                "(q^6a/d,q^9a/d;q^6)_k (q^7a^2/b^2d^2;q^2)_{2k} (q^4/d,bd/q^2;q^2)_k",
            ),
            m,
        ),
        SeriesDef::new(
            "U_star",
            tpl(
                "(1-q^{5k-1}b^2d/a) (b^2d^2/qa^2;q^2)_k (b;q^2)_{2k} (q^3b/a,b^2d^2/q^3a;q^3)_k",
                "(q^4/d,bd/q^2;q^2)_k (bd/a;q)_k (q^3a/d;q^3)_k (q^3b^3d^2/a^2;q^6)_k",
            )
            .geo(-1, "qa/bd", (-1, 1, 0)),
            m,
        ),
        SeriesDef::new(
            "V_diamond",
            tpl(
                "(1-q^{3+9k}c^3e^3/a^3) (qc,qe,q^4c^2e^2/a^3;q^3)_k \
                 (qc^2e^2/a^2,q^3c^2e^2/a^2,q^5c^2e^2/a^2;q^6)_k q^{3k}",
                "(qce/a,q^3ce/a,q^5ce/a;q^3)_k (q^5ce,q^8c^2e^3/a^3,q^8c^3e^2/a^3;q^6)_k",
            ),
            m,
        ),
        SeriesDef::new(
            "V_triangle",
            tpl(
                "(1-q^{2+8k}c^2e/a) (q^3c/a,a^2/ce;q^2)_k (qc;q^3)_{2k} (qc^2e^2/a^2;q^2)_{2k} q^{2k}",
                "(ce/a,q^3ce/a;q^2)_k (q^3a/e;q^2)_{2k} (q^5ce,q^8c^3e^2/a^3;q^6)_k",
            ),
            m,
        ),
        SeriesDef::new(
            "V_star",
            tpl(
                "(1-q^{2+5k}a^2/ce^2) (q^3c/a,a^2/ce;q^2)_k (qa/ce;q)_k (qc;q^3)_k (q^4a^3/c^2e^3;q^6)_k",
                "(q^3a^2/c^2e^2;q^2)_k (q^3a/e;q^2)_{2k} (q^2a^3/c^2e^2,q^5/e;q^3)_k",
            )
            .geo(-1, "q^2a/ce", (1, -1, 0)),
            m,
        ),
        SeriesDef::new(
            "limit_u_quadratic",
            tpl("(b,d;q^2)_k", "(bd;q^2)_{2k}").geo(1, "bd", (4, -4, 0)),
            SeriesRange::Infinite,
        ),
        SeriesDef::new(
            "limit_u_cubic",
            tpl("(b^2d^2/q^3a;q^3)_k", "(q^3a/b;q^3)_k").geo(1, "a/b", (3, 3, 0)),
            SeriesRange::Infinite,
        ),
    ]
}

fn u_template() -> super::template::TermTemplate {
    tpl(
        "(1-q^{5k}a) (q^2a/bd;q)_k (b,d;q^2)_k (q^3a^2/bd;q^6)_k (b^2d^2/q^3a;q^3)_k",
        "(bd;q^2)_{2k} (q^5a^2/b^2d^2;q^2)_k (q^3a/b,q^3a/d;q^3)_k",
    )
    .geo(-1, "q^3a/bd", (1, -1, 0))
}

fn v_template() -> super::template::TermTemplate {
    tpl(
        "(1-q^{5k}a) (a^2/ce;q^2)_{2k} (qc^2e^2/a^2;q^2)_k (qc,qe;q^3)_k",
        "(qce/a;q)_k (qa/c,qa/e;q^2)_k (q^5ce;q^6)_k (q^2a^3/c^2e^2;q^3)_k",
    )
    .geo(-1, "a/ce", (-1, 1, 0))
}

fn catalog() -> &'static [Arc<SeriesDef>] {
    static CATALOG: OnceLock<Vec<Arc<SeriesDef>>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Looks up a built-in series by name.
pub fn builtin(name: &str) -> QResult<Arc<SeriesDef>> {
    catalog().iter().find(|s| s.name == name).cloned().ok_or_else(|| QError::UnknownSeries(name.to_string()))
}

/// Every built-in series, in catalog order.
pub fn builtins() -> Vec<Arc<SeriesDef>> {
    catalog().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar_qpoch::Monomial;
    use crate::series::template::Side;

    #[test]
    fn catalog_is_complete() {
        for name in BUILTIN_NAMES {
            assert_eq!(builtin(name).unwrap().name, name);
        }
        assert!(matches!(builtin("W"), Err(QError::UnknownSeries(_))));
    }

    #[test]
    fn displayed_factors_are_present() {
        let u = builtin("U").unwrap();
        assert_eq!(u.template.linear[0].m, Monomial::lit("a"));
        assert_eq!(u.template.linear[0].kcoef, 5);
        let p = &u.template.poch_factors[0];
        assert_eq!((p.arg.clone(), p.base_exp2, p.side), (Monomial::lit("q^2a/bd"), 2, Side::Num));
        let ud = builtin("U_diamond").unwrap();
        assert_eq!(ud.template.linear[0].m, Monomial::lit("q^9a^3/b^3d^3"));
        assert_eq!(ud.template.linear[0].kcoef, 9);
        let vs = builtin("V_star").unwrap();
        assert_eq!(vs.template.geometric.sign, -1);
        assert_eq!(vs.template.geometric.base, Monomial::lit("q^2a/ce"));
        assert_eq!(vs.template.geometric.quad, (1, -1, 0));
    }
}
