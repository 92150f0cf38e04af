//! The two evaluation backends.
//!
//! - [`ExactScalar`]: reduced big rational, used for every terminating identity.
//! - [`ApproxScalar`]: binary big float carrying its working precision in decimal digits.
//!
//! Both implement [`Scalar`], so series, Pochhammer products and identity trees are written
//! once and instantiated per backend.

use std::fmt;

use dashu::base::{Abs, BitTest, SquareRoot, SquareRootRem, UnsignedAbs};
use dashu::float::round::mode::HalfEven;
use dashu::float::FBig;
use dashu::integer::{IBig, Sign, UBig};
use dashu::rational::RBig;

use crate::error::{QError, QResult};

/// Binary float used by the approximate backend.
pub type Float = FBig<HalfEven, 2>;

/// Smallest working precision accepted by [`ApproxScalar`].
pub const MIN_DIGITS: u32 = 30;

/// Field operations shared by the exact and approximate backends.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Construction context: `()` for rationals, the decimal precision for floats.
    type Ctx: Copy + fmt::Debug + Send + Sync + PartialEq;

    const EXACT: bool;

    fn from_rational(r: &RBig, ctx: Self::Ctx) -> Self;
    fn ctx(&self) -> Self::Ctx;

    fn from_int(i: i64, ctx: Self::Ctx) -> Self {
        Self::from_rational(&RBig::from(i), ctx)
    }
    fn zero_like(&self) -> Self {
        Self::from_int(0, self.ctx())
    }
    fn one_like(&self) -> Self {
        Self::from_int(1, self.ctx())
    }

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs(&self) -> Self;
    /// `|self| <= |o|`.
    fn abs_le(&self, o: &Self) -> bool;

    /// Multiplicative inverse; zero raises [`QError::DivisionByZero`].
    fn inv(&self) -> QResult<Self>;

    fn div(&self, o: &Self) -> QResult<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn powi(&self, e: i64) -> QResult<Self>;

    /// Principal square root when it exists in the backend: a perfect square for rationals,
    /// any non-negative value for floats.
    fn sqrt(&self) -> Option<Self>;

    /// `1 - self`.
    fn one_minus(&self) -> Self {
        self.one_like().sub(self)
    }

    /// Approximate `log10 |self|`, `-inf` for zero. Used only for stopping decisions.
    fn log10_abs(&self) -> f64;

    /// Scientific decimal rendering with `digits` significant digits; `"0"` for zero.
    fn to_sci(&self, digits: usize) -> String;

    /// Converts to a float at the given precision.
    fn to_approx(&self, digits: u32) -> ApproxScalar;
}

/// Exact rational value, always stored in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar(pub RBig);

impl ExactScalar {
    pub fn new(num: i64, den: u64) -> Self {
        ExactScalar(RBig::from_parts(IBig::from(num), UBig::from(den)))
    }

    pub fn numerator(&self) -> &IBig {
        self.0.numerator()
    }

    pub fn denominator(&self) -> &UBig {
        self.0.denominator()
    }

    pub fn as_rbig(&self) -> &RBig {
        &self.0
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn log2_ubig(u: &UBig) -> f64 {
    let bits = u.bit_len();
    if bits <= 64 {
        return (u64::try_from(u).unwrap() as f64).log2();
    }
    let shift = bits - 60;
    let top: UBig = u >> shift;
    (u64::try_from(&top).unwrap() as f64).log2() + shift as f64
}

fn log2_ibig(i: &IBig) -> f64 {
    if *i == IBig::ZERO {
        return f64::NEG_INFINITY;
    }
    log2_ubig(&i.unsigned_abs())
}

fn perfect_sqrt(u: &UBig) -> Option<UBig> {
    let (s, r) = u.clone().sqrt_rem();
    (r == UBig::ZERO).then_some(s)
}

/// Formats `sig * 10^exp` with at most `digits` significant digits.
fn sci_from_base10(sig: &IBig, exp: isize, digits: usize) -> String {
    if *sig == IBig::ZERO {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let neg = sig.sign() == Sign::Negative;
    let mut mag = sig.unsigned_abs();
    let mut exp = exp;
    let len = mag.to_string().len();
    if len > digits {
        let drop = len - digits;
        let p = UBig::from(10u8).pow(drop);
        let (quot, rem) = (&mag / &p, &mag % &p);
        mag = if rem * 2u8 >= p { quot + 1u8 } else { quot };
        exp += drop as isize;
    }
    let mut s = mag.to_string();
    let sci_exp = exp + s.len() as isize - 1;
    while s.len() > 1 && s.ends_with('0') {
        s.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&s[..1]);
    if s.len() > 1 {
        out.push('.');
        out.push_str(&s[1..]);
    }
    out.push_str(&format!("e{sci_exp}"));
    out
}

impl Scalar for ExactScalar {
    type Ctx = ();
    const EXACT: bool = true;

    fn from_rational(r: &RBig, _: ()) -> Self {
        ExactScalar(r.clone())
    }
    fn ctx(&self) {}

    fn add(&self, o: &Self) -> Self {
        ExactScalar(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        ExactScalar(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        ExactScalar(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        ExactScalar(-&self.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == RBig::ZERO
    }
    fn is_negative(&self) -> bool {
        self.0.sign() == Sign::Negative && !self.is_zero()
    }
    fn abs(&self) -> Self {
        ExactScalar(self.0.clone().abs())
    }
    fn abs_le(&self, o: &Self) -> bool {
        self.0.clone().abs() <= o.0.clone().abs()
    }
    fn inv(&self) -> QResult<Self> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(ExactScalar(RBig::ONE / &self.0))
    }
    fn powi(&self, e: i64) -> QResult<Self> {
        if e >= 0 {
            Ok(ExactScalar(self.0.pow(e as usize)))
        } else {
            Ok(ExactScalar(self.inv()?.0.pow(e.unsigned_abs() as usize)))
        }
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = perfect_sqrt(&self.0.numerator().unsigned_abs())?;
        let d = perfect_sqrt(self.0.denominator())?;
        Some(ExactScalar(RBig::from_parts(IBig::from(n), d)))
    }
    fn log10_abs(&self) -> f64 {
        (log2_ibig(self.0.numerator()) - log2_ubig(self.0.denominator())) * std::f64::consts::LOG10_2
    }
    fn to_sci(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.to_approx((digits as u32 + 10).max(MIN_DIGITS)).to_sci(digits)
    }
    fn to_approx(&self, digits: u32) -> ApproxScalar {
        ApproxScalar::from_rational(&self.0, digits)
    }
}

/// Arbitrary-precision float together with its working precision in decimal digits.
///
/// Binary operations take the larger of the two precisions, so precision never drops.
#[derive(Clone, Debug)]
pub struct ApproxScalar {
    value: Float,
    digits: u32,
}

/// Binary precision backing `digits` decimal digits, with a guard margin.
pub fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 24
}

impl ApproxScalar {
    pub fn from_rational(r: &RBig, digits: u32) -> Self {
        let value = r.to_float::<HalfEven, 2>(bits_for_digits(digits)).value();
        ApproxScalar { value, digits }
    }

    /// Parses a decimal literal such as `"0.05"` or `"1e-30"` exactly, then rounds.
    pub fn parse(s: &str, digits: u32) -> QResult<Self> {
        let r = parse_decimal(s).ok_or_else(|| QError::Invalid(format!("not a decimal number: {s}")))?;
        Ok(Self::from_rational(&r, digits))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    fn wrap(&self, o: &Self, value: Float) -> Self {
        ApproxScalar { value, digits: self.digits.max(o.digits) }
    }

    fn widen(&self, o: &Self) -> (Float, Float) {
        let bits = bits_for_digits(self.digits.max(o.digits));
        let a = if self.value.precision() < bits {
            self.value.clone().with_precision(bits).value()
        } else {
            self.value.clone()
        };
        let b = if o.value.precision() < bits { o.value.clone().with_precision(bits).value() } else { o.value.clone() };
        (a, b)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Compares magnitudes.
    pub fn abs_lt(&self, o: &Self) -> bool {
        self.value.clone().abs() < o.value.clone().abs()
    }
}

/// Exact rational value of a decimal literal (`-1.25`, `3e-4`, `0.05`).
pub fn parse_decimal(s: &str) -> Option<RBig> {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let mut num: IBig = digits.parse::<UBig>().ok()?.into();
    if neg {
        num = -num;
    }
    let scale = exp - frac.len() as i64;
    let ten = UBig::from(10u8);
    Some(if scale >= 0 {
        RBig::from(num * IBig::from(ten.pow(scale as usize)))
    } else {
        RBig::from_parts(num, ten.pow(scale.unsigned_abs() as usize))
    })
}

impl fmt::Display for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci(self.digits as usize))
    }
}

impl Scalar for ApproxScalar {
    type Ctx = u32;
    const EXACT: bool = false;

    fn from_rational(r: &RBig, digits: u32) -> Self {
        ApproxScalar::from_rational(r, digits)
    }
    fn ctx(&self) -> u32 {
        self.digits
    }

    fn add(&self, o: &Self) -> Self {
        let (a, b) = self.widen(o);
        self.wrap(o, a + b)
    }
    fn sub(&self, o: &Self) -> Self {
        let (a, b) = self.widen(o);
        self.wrap(o, a - b)
    }
    fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.widen(o);
        self.wrap(o, a * b)
    }
    fn neg(&self) -> Self {
        ApproxScalar { value: -self.value.clone(), digits: self.digits }
    }
    fn is_zero(&self) -> bool {
        self.value.repr().is_zero()
    }
    fn is_negative(&self) -> bool {
        self.value.sign() == Sign::Negative && !self.is_zero()
    }
    fn abs(&self) -> Self {
        ApproxScalar { value: self.value.clone().abs(), digits: self.digits }
    }
    fn abs_le(&self, o: &Self) -> bool {
        self.value.clone().abs() <= o.value.clone().abs()
    }
    fn inv(&self) -> QResult<Self> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let one = ApproxScalar::from_rational(&RBig::ONE, self.digits);
        let (a, b) = one.widen(self);
        Ok(self.wrap(&one, a / b))
    }
    fn powi(&self, e: i64) -> QResult<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let bits = bits_for_digits(self.digits);
        let v = base.value.clone().with_precision(bits).value();
        Ok(ApproxScalar { value: v.powi(IBig::from(e.unsigned_abs())), digits: self.digits })
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        Some(ApproxScalar { value: self.value.sqrt(), digits: self.digits })
    }
    fn log10_abs(&self) -> f64 {
        let repr = self.value.repr();
        if repr.is_zero() {
            return f64::NEG_INFINITY;
        }
        (log2_ibig(repr.significand()) + repr.exponent() as f64) * std::f64::consts::LOG10_2
    }
    fn to_sci(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let dec = self.value.clone().with_base::<10>().value();
        let repr = dec.repr();
        sci_from_base10(repr.significand(), repr.exponent(), digits)
    }
    fn to_approx(&self, digits: u32) -> ApproxScalar {
        let bits = bits_for_digits(digits);
        ApproxScalar { value: self.value.clone().with_precision(bits).value(), digits }
    }
}
