//! Exact and arbitrary-precision scalars, monomials and q-shifted factorials.
//!
//! - [`ExactScalar`], [`ApproxScalar`]: the two backends behind the [`Scalar`] trait
//! - [`Monomial`]: parameter powers with half-integer, meta-affine exponents
//! - [`ParameterBinding`]: values and square-root seeds of `q, a, b, c, d, e`
//! - [`poch`], [`poch_inf`]: `(x;q)_n` with the negative-length extension, and `(x;q)_∞`

mod binding;
mod monomial;
pub(crate) mod parse;
mod poch;
mod scalar;
mod symbol;

pub use binding::{monomial_eval, ApproxBinding, ExactBinding, ParameterBinding, Subst};
pub use monomial::Monomial;
pub use poch::{poch, poch_inf, poch_inf_depth, poch_inf_with_depth};
pub use scalar::{bits_for_digits, parse_decimal, ApproxScalar, ExactScalar, Float, Scalar, MIN_DIGITS};
pub use symbol::{Affine, Meta, MetaVar, Symbol};
