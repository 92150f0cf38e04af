//! Naive factor-by-factor evaluator for the built-in series.
//!
//! - [`Point`]: plain rational values of `q, a, b, c, d, e`
//! - [`naive_term`]: one summand, written out directly from the displayed products
//! - [`naive_sum`]: the sum of the first `count` summands
//!
//! Shares nothing with the template engine beyond the rational type.

#![allow(dead_code)]

use dashu::base::Inverse;
use dashu::rational::RBig;

/// Parameter values.
#[derive(Clone, Debug)]
pub struct Point {
    pub q: RBig,
    pub a: RBig,
    pub b: RBig,
    pub c: RBig,
    pub d: RBig,
    pub e: RBig,
}

fn one() -> RBig {
    RBig::ONE
}

/// `x^i`, negative `i` allowed.
pub fn pw(x: &RBig, i: i64) -> RBig {
    let mut acc = one();
    for _ in 0..i.unsigned_abs() {
        acc = acc * x;
    }
    if i < 0 {
        acc.inv()
    } else {
        acc
    }
}

/// `∏_{j<len} (1 - x·base^j)` for `len ≥ 0`.
pub fn pp(x: &RBig, base: &RBig, len: i64) -> RBig {
    assert!(len >= 0);
    let mut acc = one();
    for j in 0..len {
        acc = acc * (one() - x * pw(base, j));
    }
    acc
}

/// `x` written as `q^i · rest`.
fn qm(p: &Point, i: i64, rest: RBig) -> RBig {
    pw(&p.q, i) * rest
}

/// `C(k,2)`.
fn c2(k: i64) -> i64 {
    k * (k - 1) / 2
}

struct Frac {
    num: RBig,
    den: RBig,
}

impl Frac {
    fn new() -> Self {
        Frac { num: one(), den: one() }
    }
    fn n(&mut self, v: RBig) -> &mut Self {
        self.num = &self.num * v;
        self
    }
    fn d(&mut self, v: RBig) -> &mut Self {
        self.den = &self.den * v;
        self
    }
    fn value(&self) -> Option<RBig> {
        if self.den == RBig::ZERO {
            None
        } else {
            Some(&self.num / &self.den)
        }
    }
}

/// The `k`-th summand of a built-in series, `None` on a vanishing denominator.
pub fn naive_term(name: &str, p: &Point, k: i64) -> Option<RBig> {
    let (q, a, b, c, d, e) = (&p.q, &p.a, &p.b, &p.c, &p.d, &p.e);
    let q2 = q * q;
    let q3 = &q2 * q;
    let q4 = &q3 * q;
    let q6 = &q3 * &q3;
    let bd = b * d;
    let ce = c * e;
    let lin = |i: i64, m: RBig| one() - pw(q, i) * m;
    let mut f = Frac::new();
    match name {
        "F" => {
            f.n(lin(5 * k, a.clone()))
                .n(pp(b, q, k))
                .n(pp(d, q, k))
                .d(pp(&qm(p, 3, a / (&bd * &bd)), q, k))
                .n(pp(&qm(p, 1, a / &bd), q, 3 * k))
                .d(pp(&bd, &q2, k))
                .d(pp(&qm(p, -1, bd.clone()), &q2, k))
                .d(pp(&qm(p, 1, bd.clone()), &q2, k))
                .n(pp(&qm(p, -2, &bd * &bd), &q4, k))
                .d(pp(&qm(p, 4, a / b), &q4, k))
                .d(pp(&qm(p, 4, a / d), &q4, k))
                .n(pw(q, k));
        }
        "G" => {
            let a2 = a * a;
            f.n(lin(5 * k, a.clone()))
                .n(pp(&qm(p, -2, &ce * &ce / (&a2 * a)), q, k))
                .d(pp(&qm(p, 1, a / c), q, k))
                .d(pp(&qm(p, 1, a / e), q, k))
                .n(pp(&qm(p, 1, &a2 / &ce), &q2, k))
                .n(pp(&qm(p, 2, &a2 / &ce), &q2, k))
                .n(pp(&qm(p, 3, &a2 / &ce), &q2, k))
                .d(pp(&(&ce / a), q, 3 * k))
                .n(pp(c, &q4, k))
                .n(pp(e, &q4, k))
                .d(pp(&qm(p, 6, &a2 * &a2 / (&ce * &ce)), &q4, k))
                .n(pw(q, k));
        }
        "U" => {
            f.n(lin(5 * k, a.clone()))
                .n(pp(&qm(p, 2, a / &bd), q, k))
                .d(pp(&bd, &q2, 2 * k))
                .n(pp(b, &q2, k))
                .n(pp(d, &q2, k))
                .d(pp(&qm(p, 5, a * a / (&bd * &bd)), &q2, k))
                .n(pp(&qm(p, 3, a * a / &bd), &q6, k))
                .d(pw(&(-qm(p, -3, &bd / a)), k))
                .n(pp(&qm(p, -3, &bd * &bd / a), &q3, k))
                .d(pp(&qm(p, 3, a / b), &q3, k))
                .d(pp(&qm(p, 3, a / d), &q3, k))
                .n(pw(q, c2(k)));
        }
        "V" => {
            f.n(lin(5 * k, a.clone()))
                .n(pp(&(a * a / &ce), &q2, 2 * k))
                .d(pp(&qm(p, 1, &ce / a), q, k))
                .n(pp(&qm(p, 1, &ce * &ce / (a * a)), &q2, k))
                .d(pp(&qm(p, 1, a / c), &q2, k))
                .d(pp(&qm(p, 1, a / e), &q2, k))
                .n(pw(&(-(a / &ce)), k))
                .d(pp(&qm(p, 5, ce.clone()), &q6, k))
                .n(pp(&qm(p, 1, c.clone()), &q3, k))
                .n(pp(&qm(p, 1, e.clone()), &q3, k))
                .d(pp(&qm(p, 2, pw(a, 3) / (&ce * &ce)), &q3, k))
                .n(pw(q, -c2(k)));
        }
        "U_diamond" => {
            let x = a / &bd;
            let y = a * a / (&bd * &bd);
            f.n(lin(9 + 9 * k, pw(&x, 3)))
                .n(pp(&qm(p, 2, x.clone()), &q3, k))
                .n(pp(&qm(p, 4, x.clone()), &q3, k))
                .n(pp(&qm(p, 6, x.clone()), &q3, k))
                .d(pp(&qm(p, 3, a / b), &q3, k))
                .d(pp(&qm(p, 3, a / d), &q3, k))
                .d(pp(&qm(p, 9, a / (&bd * &bd)), &q3, k))
                .n(pp(&qm(p, 3, a * a / &bd), &q6, k))
                .n(pp(&qm(p, 9, &y / d), &q6, k))
                .n(pp(&qm(p, 9, &y / b), &q6, k))
                .d(pp(&qm(p, 9, y.clone()), &q6, k))
                .d(pp(&qm(p, 11, y.clone()), &q6, k))
                .d(pp(&qm(p, 13, y.clone()), &q6, k))
                .n(pw(q, 3 * k));
        }
        "U_triangle" => {
            let y = a * a / (&bd * &bd);
            f.n(lin(5 + 8 * k, a * a / (b * d * d)))
                .n(pp(&qm(p, 3, a * a / &bd), &q6, k))
                .n(pp(&qm(p, 9, &y / d), &q6, k))
                .d(pp(&qm(p, 6, a / d), &q6, k))
                .d(pp(&qm(p, 9, a / d), &q6, k))
                .n(pp(b, &q2, 2 * k))
                .d(pp(&qm(p, 7, y.clone()), &q2, 2 * k))
                .n(pp(&qm(p, 2, a / &bd), &q2, k))
                .n(pp(&qm(p, 5, a / &bd), &q2, k))
                .d(pp(&qm(p, 4, d.inv()), &q2, k))
                .d(pp(&qm(p, -2, bd.clone()), &q2, k))
                .n(pw(q, 2 * k));
        }
        "U_star" => {
            f.n(lin(5 * k - 1, b * b * d / a))
                .n(pp(&qm(p, -1, &bd * &bd / (a * a)), &q2, k))
                .d(pp(&qm(p, 4, d.inv()), &q2, k))
                .d(pp(&qm(p, -2, bd.clone()), &q2, k))
                .n(pp(b, &q2, 2 * k))
                .d(pp(&(&bd / a), q, k))
                .n(pp(&qm(p, 3, b / a), &q3, k))
                .n(pp(&qm(p, -3, &bd * &bd / a), &q3, k))
                .d(pp(&qm(p, 3, a / d), &q3, k))
                .n(pw(&(-qm(p, 1, a / &bd)), k))
                .n(pw(q, -c2(k)))
                .d(pp(&qm(p, 3, pw(b, 3) * d * d / (a * a)), &q6, k));
        }
        "V_diamond" => {
            let x = &ce / a;
            let y = &ce * &ce / (a * a);
            f.n(lin(3 + 9 * k, pw(&x, 3)))
                .n(pp(&qm(p, 1, c.clone()), &q3, k))
                .n(pp(&qm(p, 1, e.clone()), &q3, k))
                .n(pp(&qm(p, 4, &ce * &ce / pw(a, 3)), &q3, k))
                .d(pp(&qm(p, 1, x.clone()), &q3, k))
                .d(pp(&qm(p, 3, x.clone()), &q3, k))
                .d(pp(&qm(p, 5, x.clone()), &q3, k))
                .n(pp(&qm(p, 1, y.clone()), &q6, k))
                .n(pp(&qm(p, 3, y.clone()), &q6, k))
                .n(pp(&qm(p, 5, y.clone()), &q6, k))
                .d(pp(&qm(p, 5, ce.clone()), &q6, k))
                .d(pp(&qm(p, 8, &ce * &ce * e / pw(a, 3)), &q6, k))
                .d(pp(&qm(p, 8, &ce * &ce * c / pw(a, 3)), &q6, k))
                .n(pw(q, 3 * k));
        }
        "V_triangle" => {
            f.n(lin(2 + 8 * k, c * c * e / a))
                .n(pp(&qm(p, 3, c / a), &q2, k))
                .n(pp(&(a * a / &ce), &q2, k))
                .d(pp(&(&ce / a), &q2, k))
                .d(pp(&qm(p, 3, &ce / a), &q2, k))
                .n(pp(&qm(p, 1, c.clone()), &q3, 2 * k))
                .n(pp(&qm(p, 1, &ce * &ce / (a * a)), &q2, 2 * k))
                .d(pp(&qm(p, 3, a / e), &q2, 2 * k))
                .d(pp(&qm(p, 5, ce.clone()), &q6, k))
                .d(pp(&qm(p, 8, &ce * &ce * c / pw(a, 3)), &q6, k))
                .n(pw(q, 2 * k));
        }
        "V_star" => {
            f.n(lin(2 + 5 * k, a * a / (c * e * e)))
                .n(pp(&qm(p, 3, c / a), &q2, k))
                .n(pp(&(a * a / &ce), &q2, k))
                .d(pp(&qm(p, 3, a * a / (&ce * &ce)), &q2, k))
                .n(pp(&qm(p, 1, a / &ce), q, k))
                .d(pp(&qm(p, 3, a / e), &q2, 2 * k))
                .n(pw(q, c2(k)))
                .n(pw(&(-qm(p, 2, a / &ce)), k))
                .n(pp(&qm(p, 1, c.clone()), &q3, k))
                .d(pp(&qm(p, 2, pw(a, 3) / (&ce * &ce)), &q3, k))
                .d(pp(&qm(p, 5, e.inv()), &q3, k))
                .n(pp(&qm(p, 4, pw(a, 3) / (&ce * &ce * e)), &q6, k));
        }
        "limit_u_quadratic" => {
            f.n(pw(&bd, k))
                .n(pp(b, &q2, k))
                .n(pp(d, &q2, k))
                .d(pp(&bd, &q2, 2 * k))
                .n(pw(q, 4 * c2(k)));
        }
        "limit_u_cubic" => {
            f.n(pw(&(a / b), k))
                .n(pp(&qm(p, -3, &bd * &bd / a), &q3, k))
                .d(pp(&qm(p, 3, a / b), &q3, k))
                .n(pw(q, 3 * c2(k + 1)));
        }
        other => panic!("no naive form for {other}"),
    }
    f.value()
}

/// `Σ_{k<count} naive_term(k)`.
pub fn naive_sum(name: &str, p: &Point, count: i64) -> Option<RBig> {
    let mut acc = RBig::ZERO;
    for k in 0..count {
        acc = acc + naive_term(name, p, k)?;
    }
    Some(acc)
}
