//! Theta functions and elliptic shifted factorials.
//!
//! - [`theta`]: `θ(x;p) = (x;p)_∞ (p/x;p)_∞`
//! - [`ell_poch`]: `[x; base, p]_len = ∏_{i<len} θ(x·base^i; p)`
//! - [`verify_elliptic`]: numeric check of an elliptic identity at a given nome

use crate::error::{QError, QResult};
use crate::scalar_qpoch::{poch_inf, Scalar};
use dashu::rational::RBig;

pub use crate::identities::verify_elliptic;

/// `θ(x;p)`, each of the two infinite products truncated to relative tail `eps/2`.
///
/// At `p = 0` this is `1 - x`, in exact arithmetic as well.
pub fn theta<S: Scalar>(x: &S, p: &S, eps: &S) -> QResult<S> {
    if x.is_zero() {
        return Err(QError::ZeroArgument);
    }
    let half = eps.mul(&S::from_rational(&RBig::from_parts(1.into(), 2u8.into()), eps.ctx()));
    let left = poch_inf(x, p, &half)?;
    let right = poch_inf(&p.div(x)?, p, &half)?;
    Ok(left.mul(&right))
}

/// `[x; base, p]_len`; negative lengths use `[x;q,p]_{-n} = 1/[x q^{-n}; q,p]_n`.
pub fn ell_poch<S: Scalar>(x: &S, base: &S, p: &S, len: i64, eps: &S) -> QResult<S> {
    if len < 0 {
        if base.is_zero() {
            return Err(QError::PoleAtExtension(format!("[{x};{base},{p}]_{len}")));
        }
        let shifted = x.mul(&base.powi(len)?);
        let d = ell_poch(&shifted, base, p, -len, eps)?;
        return d.inv().map_err(|_| QError::PoleAtExtension(format!("[{x};{base},{p}]_{len}")));
    }
    let factor_eps = if len > 1 { eps.mul(&S::from_rational(&RBig::from_parts(1.into(), (len as u64).into()), eps.ctx())) } else { eps.clone() };
    let mut acc = x.one_like();
    let mut t = x.clone();
    for i in 0..len {
        acc = acc.mul(&theta(&t, p, &factor_eps)?);
        if i + 1 < len {
            t = t.mul(base);
        }
    }
    Ok(acc)
}
