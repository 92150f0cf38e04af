//! q-shifted factorials, finite and infinite.

use super::scalar::Scalar;
use crate::error::{QError, QResult};

/// `(x; base)_len`, extended to negative lengths by `(x;q)_{-n} = 1/(x q^{-n}; q)_n`.
pub fn poch<S: Scalar>(x: &S, base: &S, len: i64) -> QResult<S> {
    if len >= 0 {
        let mut acc = x.one_like();
        let mut t = x.clone();
        for j in 0..len {
            acc = acc.mul(&t.one_minus());
            if j + 1 < len {
                t = t.mul(base);
            }
        }
        return Ok(acc);
    }
    if base.is_zero() {
        return Err(QError::PoleAtExtension(format!("({x};{base})_{len}")));
    }
    let shifted = x.mul(&base.powi(len)?);
    let d = poch(&shifted, base, -len)?;
    d.inv().map_err(|_| QError::PoleAtExtension(format!("({x};{base})_{len}")))
}

/// Number of factors needed so that the tail of `(x; base)_∞` is below `eps` in relative size.
///
/// Uses `|log ∏_{k≥K}(1 − base^k x)| ≤ |x||base|^K / ((1 − |base|)(1 − |x||base|^K))`.
pub fn poch_inf_depth(log10_x: f64, log10_base: f64, log10_eps: f64) -> usize {
    if log10_x == f64::NEG_INFINITY {
        return 0;
    }
    if log10_base == f64::NEG_INFINITY {
        return 1;
    }
    let b = 10f64.powf(log10_base);
    // |x||b|^K <= eps (1-|b|) / 2 also forces |x||b|^K <= 1/2.
    let target = log10_eps + (1.0 - b).log10() - std::f64::consts::LOG10_2;
    let k = ((target - log10_x) / log10_base).ceil();
    if k.is_finite() && k > 0.0 {
        k as usize
    } else {
        0
    }
}

/// `(x; base)_∞` for `|base| < 1`, truncated with a certified relative tail below `eps`.
///
/// Returns the value and the number of factors used.
pub fn poch_inf_with_depth<S: Scalar>(x: &S, base: &S, eps: &S) -> QResult<(S, usize)> {
    if S::EXACT && !base.is_zero() && !x.is_zero() {
        return Err(QError::ExactUnsupported("an infinite product"));
    }
    let lb = base.log10_abs();
    if lb >= 0.0 {
        return Err(QError::DivergentBase(base.to_sci(12)));
    }
    let depth = poch_inf_depth(x.log10_abs(), lb, eps.log10_abs());
    Ok((poch(x, base, depth as i64)?, depth))
}

pub fn poch_inf<S: Scalar>(x: &S, base: &S, eps: &S) -> QResult<S> {
    poch_inf_with_depth(x, base, eps).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar_qpoch::{ApproxScalar, ExactScalar};

    fn ex(n: i64, d: u64) -> ExactScalar {
        ExactScalar::new(n, d)
    }

    #[test]
    fn finite_products() {
        let x = ex(3, 7);
        assert_eq!(poch(&x, &ex(1, 2), 0).unwrap(), ex(1, 1));
        assert_eq!(poch(&ex(1, 2), &ex(1, 2), 2).unwrap(), ex(3, 8));
        assert_eq!(poch(&ex(1, 3), &ex(2, 1), 2).unwrap(), ex(2, 9));
        assert_eq!(poch(&ex(1, 5), &ex(1, 2), -1).unwrap(), ex(5, 3));
    }

    #[test]
    fn extension_pole() {
        // (1/2; 1/2)_{-1} = 1/(1 - 1)
        assert!(matches!(poch(&ex(1, 2), &ex(1, 2), -1), Err(QError::PoleAtExtension(_))));
    }

    #[test]
    fn infinite_product_reference_value() {
        let d = 50;
        let half = ApproxScalar::parse("0.5", d).unwrap();
        let eps = ApproxScalar::parse("1e-40", d).unwrap();
        let v = poch_inf(&half, &half, &eps).unwrap();
        assert!(v.to_sci(40).starts_with("2.88788095086602421278899721929230780088"));
        let zero = ApproxScalar::parse("0", d).unwrap();
        assert_eq!(poch_inf(&zero, &half, &eps).unwrap().to_sci(10), "1e0");
        assert_eq!(poch_inf(&half, &zero, &eps).unwrap().to_sci(10), "5e-1");
        assert!(matches!(poch_inf(&half, &ApproxScalar::parse("1.5", d).unwrap(), &eps), Err(QError::DivergentBase(_))));
    }

    #[test]
    fn exact_mode_refuses_infinite_products() {
        assert!(poch_inf(&ex(1, 2), &ex(1, 2), &ex(1, 1000)).is_err());
    }
}
