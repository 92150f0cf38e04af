//! Property tests for the exact building blocks.

use dashu::rational::RBig;
use proptest::prelude::*;
use quartic_core::abel::check_lemma;
use quartic_core::scalar_qpoch::poch;
use quartic_core::{ExactScalar, Scalar};

fn rat() -> impl Strategy<Value = ExactScalar> {
    (-40i64..=40, 1u64..=40).prop_map(|(p, q)| ExactScalar(RBig::from_parts(p.into(), q.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lemma_holds_for_any_sequences(pairs in prop::collection::vec((rat(), rat()), 1..14)) {
        let (a, b): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let (l, r) = check_lemma(&a, &b).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn shifted_factorials_split(x in rat(), q in rat(), m in -4i64..6, n in -4i64..6) {
        prop_assume!(!q.is_zero());
        let whole = poch(&x, &q, m + n);
        let head = poch(&x, &q, m);
        let tail = q.powi(m).and_then(|qm| poch(&x.mul(&qm), &q, n));
        if let (Ok(w), Ok(h), Ok(t)) = (whole, head, tail) {
            prop_assert_eq!(w, h.mul(&t));
        }
    }
}
