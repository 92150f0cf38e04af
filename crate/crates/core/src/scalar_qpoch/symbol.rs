//! Parameter alphabet, meta-integers and affine integer forms in the meta-integers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A series parameter. `q` is the base; the rest are the free letters of the four quartic series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Q,
    A,
    B,
    C,
    D,
    E,
}

impl Symbol {
    pub const ALL: [Symbol; 6] = [Symbol::Q, Symbol::A, Symbol::B, Symbol::C, Symbol::D, Symbol::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Symbol::Q => 'q',
            Symbol::A => 'a',
            Symbol::B => 'b',
            Symbol::C => 'c',
            Symbol::D => 'd',
            Symbol::E => 'e',
        }
    }

    pub fn from_letter(c: char) -> Option<Symbol> {
        Some(match c {
            'q' => Symbol::Q,
            'a' => Symbol::A,
            'b' => Symbol::B,
            'c' => Symbol::C,
            'd' => Symbol::D,
            'e' => Symbol::E,
            _ => return None,
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Integer meta-symbols. `K` is reserved for the summation index; `Delta` ranges over {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MetaVar {
    N,
    M,
    K,
    Delta,
}

impl MetaVar {
    pub const ALL: [MetaVar; 4] = [MetaVar::N, MetaVar::M, MetaVar::K, MetaVar::Delta];

    pub fn letter(self) -> char {
        match self {
            MetaVar::N => 'n',
            MetaVar::M => 'm',
            MetaVar::K => 'k',
            MetaVar::Delta => 'δ',
        }
    }

    pub fn from_letter(c: char) -> Option<MetaVar> {
        Some(match c {
            'n' => MetaVar::N,
            'm' => MetaVar::M,
            'k' => MetaVar::K,
            'δ' => MetaVar::Delta,
            _ => return None,
        })
    }
}

/// Values of the meta-integers at one instantiation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Meta {
    pub n: i64,
    pub m: i64,
    pub k: i64,
    pub delta: i64,
}

impl Meta {
    pub fn new(n: i64, m: i64) -> Self {
        Meta { n, m, k: 0, delta: 0 }
    }

    pub fn get(&self, v: MetaVar) -> i64 {
        match v {
            MetaVar::N => self.n,
            MetaVar::M => self.m,
            MetaVar::K => self.k,
            MetaVar::Delta => self.delta,
        }
    }

    pub fn with(mut self, v: MetaVar, value: i64) -> Self {
        match v {
            MetaVar::N => self.n = value,
            MetaVar::M => self.m = value,
            MetaVar::K => self.k = value,
            MetaVar::Delta => self.delta = value,
        }
        self
    }

    pub fn with_k(self, k: i64) -> Self {
        self.with(MetaVar::K, k)
    }
}

/// Integer affine form `c0 + cn·n + cm·m + ck·k + cδ·δ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Affine {
    pub c0: i64,
    /// Coefficients in [`MetaVar::ALL`] order.
    pub c: [i64; 4],
}

impl Affine {
    pub const ZERO: Affine = Affine { c0: 0, c: [0; 4] };

    pub const fn constant(c0: i64) -> Self {
        Affine { c0, c: [0; 4] }
    }

    /// Parses an integer affine form such as `2n-1-k`, panicking on malformed input.
    pub fn lit(s: &str) -> Affine {
        super::parse::affine(s).unwrap_or_else(|e| panic!("bad affine literal: {e}"))
    }

    pub fn var(v: MetaVar) -> Self {
        let mut a = Affine::ZERO;
        a.c[v as usize] = 1;
        a
    }

    pub fn eval(&self, meta: &Meta) -> i64 {
        self.c0 + self.c[0] * meta.n + self.c[1] * meta.m + self.c[2] * meta.k + self.c[3] * meta.delta
    }

    pub fn is_zero(&self) -> bool {
        *self == Affine::ZERO
    }

    pub fn coef(&self, v: MetaVar) -> i64 {
        self.c[v as usize]
    }

    pub fn add(&self, o: &Affine) -> Affine {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(o.c) {
            *x += y;
        }
        Affine { c0: self.c0 + o.c0, c }
    }

    pub fn scale(&self, s: i64) -> Affine {
        Affine { c0: self.c0 * s, c: self.c.map(|x| x * s) }
    }

    pub fn neg(&self) -> Affine {
        self.scale(-1)
    }

    /// Exact halving, when every coefficient is even.
    pub fn halve(&self) -> Option<Affine> {
        if self.c0 % 2 == 0 && self.c.iter().all(|x| x % 2 == 0) {
            Some(Affine { c0: self.c0 / 2, c: self.c.map(|x| x / 2) })
        } else {
            None
        }
    }

    /// Renders the form divided by `den` (1 or 2), e.g. `3/2+2n`.
    pub fn render(&self, den: i64) -> String {
        let mut parts: Vec<(i64, Option<char>)> = Vec::new();
        for v in MetaVar::ALL {
            let c = self.coef(v);
            if c != 0 {
                parts.push((c, Some(v.letter())));
            }
        }
        // `2+3k` but `n-1`
        if self.c0 > 0 {
            parts.insert(0, (self.c0, None));
        } else if self.c0 < 0 {
            parts.push((self.c0, None));
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, var)) in parts.iter().enumerate() {
            let (num, d) = reduce(*c, den);
            if num < 0 {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = num.abs();
            let body = match (a, d, var) {
                (1, 1, Some(v)) => v.to_string(),
                (_, 1, Some(v)) => format!("{a}{v}"),
                (_, 1, None) => a.to_string(),
                (1, _, Some(v)) => format!("{v}/{d}"),
                (_, _, Some(v)) => format!("{a}{v}/{d}"),
                (_, _, None) => format!("{a}/{d}"),
            };
            out.push_str(&body);
        }
        out
    }
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    if den == 2 && num % 2 == 0 {
        (num / 2, 1)
    } else {
        (num, den)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(1))
    }
}
