//! Product-string notation for term templates.
//!
//! A template is written as a numerator string and a denominator string, each a sequence of
//! factors separated by optional whitespace:
//! - `(1-q^{5k}a)`, `(1+q^2a/ce)`: linear factors; `θ(q^{5k}a)` is the elliptic version
//! - `(b,d;q^2)_k`, `(bd;q^2)_{2k}`, `(x;q^{-1})_{n-1}`, `(x;q^6)_∞`: shifted factorials,
//!   one per listed argument
//! - `[a,b;q^2,p]_k` or `[a,b;q^2]_k`: elliptic shifted factorials
//! - a bare monomial such as `q^{2k}`, `a` or `-1`: its `k`-linear part joins the
//!   geometric factor, the rest joins the constant scale
//!
//! Monomials follow [`crate::scalar_qpoch::Monomial`]'s compact notation.

use super::template::{FactorSpec, LinearFactorSpec, Length, Side, TermTemplate};
use crate::scalar_qpoch::parse::{parse_affine, parse_exponent, parse_monomial, Cursor};
use crate::scalar_qpoch::{Affine, MetaVar, Monomial, Symbol};

/// Parses a template from its numerator and denominator strings.
pub fn parse_template(num: &str, den: &str) -> Result<TermTemplate, String> {
    let mut t = TermTemplate::default();
    parse_side(num, Side::Num, &mut t)?;
    parse_side(den, Side::Den, &mut t)?;
    Ok(t)
}

/// Panicking form of [`parse_template`] for static catalog entries.
pub fn tpl(num: &str, den: &str) -> TermTemplate {
    parse_template(num, den).unwrap_or_else(|e| panic!("bad template: {e}"))
}

fn parse_side(s: &str, side: Side, t: &mut TermTemplate) -> Result<(), String> {
    let mut cur = Cursor::new(s);
    loop {
        cur.skip_ws();
        if cur.at_end() {
            return Ok(());
        }
        if cur.eat('θ') {
            cur.expect('(')?;
            let m = parse_monomial(&mut cur)?;
            cur.expect(')')?;
            t.linear.push(linear(m, side, true, &cur)?);
        } else if cur.eat('[') {
            let (args, base) = parse_args(&mut cur, ']')?;
            let len = parse_len(&mut cur)?;
            push_factors(t, args, base, len, side, true);
        } else if cur.peek() == Some('(') {
            cur.bump();
            if cur.contains_before_close(';') {
                let (args, base) = parse_args(&mut cur, ')')?;
                let len = parse_len(&mut cur)?;
                push_factors(t, args, base, len, side, false);
            } else {
                cur.skip_ws();
                if cur.eat('1') {
                    cur.skip_ws();
                    let neg = if cur.eat('-') {
                        false
                    } else if cur.eat('+') {
                        true
                    } else {
                        return Err(cur.error("expected '-' or '+' after '(1'"));
                    };
                    cur.skip_ws();
                    let mut m = parse_monomial(&mut cur)?;
                    if neg {
                        m.sign = -m.sign;
                    }
                    cur.skip_ws();
                    cur.expect(')')?;
                    t.linear.push(linear(m, side, false, &cur)?);
                } else {
                    let m = parse_monomial(&mut cur)?;
                    cur.expect(')')?;
                    bare(t, m, side)?;
                }
            }
        } else {
            let m = parse_monomial(&mut cur)?;
            bare(t, m, side)?;
        }
    }
}

fn linear(m: Monomial, side: Side, elliptic: bool, cur: &Cursor) -> Result<LinearFactorSpec, String> {
    let (ck2, rest) = m.split_q_k();
    if ck2 % 2 != 0 || rest.mentions(MetaVar::K) {
        return Err(cur.error("linear factor must be m·q^{c·k} with integer c"));
    }
    Ok(LinearFactorSpec { m: rest, kcoef: ck2 / 2, side, elliptic })
}

fn parse_args(cur: &mut Cursor, close: char) -> Result<(Vec<Monomial>, i64), String> {
    let mut args = Vec::new();
    loop {
        cur.skip_ws();
        args.push(parse_monomial(cur)?);
        cur.skip_ws();
        if cur.eat(';') {
            break;
        }
        cur.expect(',')?;
    }
    cur.skip_ws();
    cur.expect('q')?;
    let base = if cur.eat('^') { parse_exponent(cur)? } else { Affine::constant(2) };
    if !base.c.iter().all(|&c| c == 0) {
        return Err(cur.error("base exponent must be constant"));
    }
    cur.skip_ws();
    if cur.eat(',') {
        cur.skip_ws();
        cur.expect('p')?;
    }
    cur.skip_ws();
    cur.expect(close)?;
    Ok((args, base.c0))
}

fn parse_len(cur: &mut Cursor) -> Result<Length, String> {
    cur.expect('_')?;
    if cur.eat('∞') || cur.eat_str("inf") {
        return Ok(Length::Infinite);
    }
    if cur.eat('{') {
        let a = parse_affine(cur, false)?;
        cur.expect('}')?;
        return Ok(Length::Finite(a));
    }
    if let Some(v) = cur.peek().and_then(MetaVar::from_letter) {
        cur.bump();
        return Ok(Length::Finite(Affine::var(v)));
    }
    let d = cur.digits().ok_or_else(|| cur.error("expected a length"))?;
    Ok(Length::Finite(Affine::constant(d as i64)))
}

fn push_factors(t: &mut TermTemplate, args: Vec<Monomial>, base_exp2: i64, len: Length, side: Side, elliptic: bool) {
    for arg in args {
        t.poch_factors.push(FactorSpec { arg, base_exp2, len, side, elliptic });
    }
}

/// Splits a bare monomial into its `k`-linear part (geometric) and constant part (scale).
fn bare(t: &mut TermTemplate, m: Monomial, side: Side) -> Result<(), String> {
    let m = if side == Side::Den { m.inv() } else { m };
    let mut base = Monomial::one();
    let mut rest = m;
    for s in Symbol::ALL {
        let e = rest.exps[s.index()];
        let ck = e.coef(MetaVar::K);
        if ck != 0 {
            base.exps[s.index()] = Affine::constant(ck);
            rest.exps[s.index()].c[MetaVar::K as usize] = 0;
        }
    }
    t.geometric.base = t.geometric.base.mul(&base);
    t.scale = t.scale.mul(&rest);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quartic_summand() {
        let t = tpl(
            "(1-q^{5k}a) (q^2a/bd;q)_k (b,d;q^2)_k (q^3a^2/bd;q^6)_k (b^2d^2/q^3a;q^3)_k",
            "(bd;q^2)_{2k} (q^5a^2/b^2d^2;q^2)_k (q^3a/b,q^3a/d;q^3)_k",
        )
        .geo(-1, "q^3a/bd", (1, -1, 0));
        assert_eq!(t.linear.len(), 1);
        assert_eq!(t.linear[0].kcoef, 5);
        assert_eq!(t.linear[0].m, Monomial::lit("a"));
        assert_eq!(t.poch_factors.len(), 9);
        assert_eq!(t.poch_factors[5].len, Length::Finite(Affine { c0: 0, c: [0, 0, 2, 0] }));
        assert_eq!(t.poch_factors[5].side, Side::Den);
        assert_eq!(t.geometric.sign, -1);
    }

    #[test]
    fn bare_monomials_split_into_geometric_and_scale() {
        let t = tpl("q^{2+3k}a", "b");
        assert_eq!(t.geometric.base, Monomial::lit("q^3"));
        assert_eq!(t.scale, Monomial::lit("q^2a/b"));
    }

    #[test]
    fn elliptic_and_negative_bases() {
        let t = tpl("θ(q^{5k}a) [a;q^2,p]_k (bd/q^4a;q^{-1})_{n-1}", "θ(a) (x;q^6)_∞".replace('x', "q^3").as_str());
        assert!(t.linear[0].elliptic && t.linear[1].elliptic);
        assert_eq!(t.linear[1].side, Side::Den);
        assert!(t.poch_factors[0].elliptic);
        assert_eq!(t.poch_factors[1].base_exp2, -2);
        assert_eq!(t.poch_factors[2].len, Length::Infinite);
        assert_eq!(t.to_string(), "θ(q^{5k}a) [a;q^2,p]_k (bd/q^4a;q^{-1})_{n-1} / θ(a) (q^3;q^6)_∞");
    }

    #[test]
    fn plus_sign_linear_factor() {
        let t = tpl("(1+q^2a)", "");
        assert_eq!(t.linear[0].m.sign, -1);
        assert_eq!(t.to_string(), "(1+q^2a)");
    }
}
