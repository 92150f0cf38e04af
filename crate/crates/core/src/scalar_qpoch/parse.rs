//! Cursor and small recursive-descent helpers for the compact notation used by the built-in
//! catalog, e.g. `q^{3/2}a/b` or `q^{2+3k}a^2/bd^3`.
//!
//! Monomials are written as in print: juxtaposed letters multiply, one `/` starts the
//! denominator, exponents are plain integers or `{affine}` forms in `n, m, k, δ` with
//! halves allowed (`q^{-1/2-3n}`).

use dashu::integer::UBig;
use dashu::rational::RBig;

use super::monomial::Monomial;
use super::symbol::{Affine, MetaVar, Symbol};

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(s: &str) -> Self {
        Cursor { chars: s.chars().collect(), pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn peek_at(&self, off: usize) -> Option<char> {
        self.chars.get(self.pos + off).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars[self.pos..].iter().take(n).copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), String> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn error(&self, msg: &str) -> String {
        let text: String = self.chars.iter().collect();
        format!("{msg} at offset {} in `{text}`", self.pos)
    }

    /// Whether `target` occurs at depth zero before the bracket closing the current group.
    pub(crate) fn contains_before_close(&self, target: char) -> bool {
        let mut depth = 0usize;
        for &c in &self.chars[self.pos..] {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' if depth == 0 => return false,
                ')' | ']' | '}' => depth -= 1,
                c if c == target && depth == 0 => return true,
                _ => {}
            }
        }
        false
    }

    pub(crate) fn digits(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }
}

/// Parses an affine form; with `halves` the result is doubled so `3/2` becomes `3`.
pub(crate) fn parse_affine(cur: &mut Cursor, halves: bool) -> Result<Affine, String> {
    let scale = if halves { 2 } else { 1 };
    let mut acc = Affine::ZERO;
    let mut first = true;
    loop {
        let sign = if cur.eat('-') {
            -1
        } else if cur.eat('+') || first {
            1
        } else {
            break;
        };
        first = false;
        let num = cur.digits();
        let var = cur.peek().and_then(MetaVar::from_letter);
        if var.is_some() {
            cur.bump();
        }
        let den = if (num.is_some() || var.is_some())
            && cur.peek() == Some('/')
            && cur.peek_at(1).is_some_and(|c| c.is_ascii_digit())
        {
            cur.bump();
            cur.digits().unwrap()
        } else {
            1
        };
        if num.is_none() && var.is_none() {
            return Err(cur.error("expected an affine term"));
        }
        let num = num.unwrap_or(1) as i64 * scale;
        if num % den as i64 != 0 {
            return Err(cur.error("fraction not representable"));
        }
        let coef = sign * num / den as i64;
        match var {
            Some(v) => acc.c[v as usize] += coef,
            None => acc.c0 += coef,
        }
    }
    Ok(acc)
}

/// Exponent after `^`: plain integer or `{affine}`, returned doubled.
pub(crate) fn parse_exponent(cur: &mut Cursor) -> Result<Affine, String> {
    if cur.eat('{') {
        let a = parse_affine(cur, true)?;
        cur.expect('}')?;
        Ok(a)
    } else if let Some(v) = cur.peek().and_then(MetaVar::from_letter) {
        cur.bump();
        Ok(Affine::var(v).scale(2))
    } else {
        let neg = cur.eat('-');
        let d = cur.digits().ok_or_else(|| cur.error("expected exponent"))? as i64;
        Ok(Affine::constant(if neg { -2 * d } else { 2 * d }))
    }
}

fn parse_factors(cur: &mut Cursor, m: &mut Monomial, sign: i64) -> Result<bool, String> {
    let mut any = false;
    if let Some(d) = cur.digits() {
        any = true;
        let r = RBig::from(UBig::from(d));
        m.coeff = if sign > 0 { &m.coeff * &r } else { &m.coeff / &r };
    }
    while let Some(sym) = cur.peek().and_then(Symbol::from_letter) {
        cur.bump();
        any = true;
        let e = if cur.eat('^') { parse_exponent(cur)? } else { Affine::constant(2) };
        let slot = &mut m.exps[sym.index()];
        *slot = slot.add(&e.scale(sign));
    }
    Ok(any)
}

/// Parses one monomial, stopping at the first character that cannot continue it.
pub(crate) fn parse_monomial(cur: &mut Cursor) -> Result<Monomial, String> {
    let mut m = Monomial::one();
    if cur.eat('-') {
        m.sign = -1;
    } else {
        cur.eat('+');
    }
    let any = parse_factors(cur, &mut m, 1)?;
    if cur.peek() == Some('/') {
        cur.bump();
        if !parse_factors(cur, &mut m, -1)? {
            return Err(cur.error("empty denominator"));
        }
    } else if !any {
        return Err(cur.error("expected a monomial"));
    }
    Ok(m)
}

/// Parses a whole string as one monomial.
pub(crate) fn monomial(s: &str) -> Result<Monomial, String> {
    let mut cur = Cursor::new(s);
    let m = parse_monomial(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(m)
}

/// Parses a whole string as an integer affine form, e.g. `2n-2-2k`.
pub(crate) fn affine(s: &str) -> Result<Affine, String> {
    let mut cur = Cursor::new(s);
    let a = parse_affine(&mut cur, false)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(a)
}
