//! Text grammar for polynomials:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*      division by nonzero constants only
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'x' integer | '(' expr ')'
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{HomogeneousPolynomial, Monomial, Rationals, MAX_VARS};
use crate::error::{Error, Result};

type Terms = BTreeMap<Monomial, BigRational>;

/// Parses `text` in variables `x0..x{nvars-1}` and checks homogeneity.
pub fn parse_poly(text: &str, nvars: usize) -> Result<HomogeneousPolynomial<Rationals>> {
    let terms = parse_terms(text, nvars)?;
    if terms.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    HomogeneousPolynomial::from_terms(Rationals, nvars, terms)
}

/// Parses `text` into collected terms without a homogeneity check.
pub fn parse_terms(text: &str, nvars: usize) -> Result<Terms> {
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: String::from(msg) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let v = self.integer()?;
        u32::try_from(v).ok().filter(|&e| e <= u16::MAX as u32).ok_or_else(|| self.err("exponent too large"))
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    add_into(&mut acc, rhs, false);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    add_into(&mut acc, rhs, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = mul(&acc, &rhs);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.unary()?;
                    let c = constant_value(&rhs).filter(|c| !c.is_zero()).ok_or(Error::Parse {
                        pos: at,
                        msg: "division only by nonzero constants".into(),
                    })?;
                    let inv = c.recip();
                    for v in acc.values_mut() {
                        *v = &*v * &inv;
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Terms> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let mut t = self.unary()?;
                for v in t.values_mut() {
                    *v = -&*v;
                }
                Ok(t)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Terms> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.small_integer()?;
            let mut acc = constant(BigRational::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Terms> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let idx = self.small_integer()? as usize;
                if idx >= self.nvars {
                    return Err(Error::Parse {
                        pos: at,
                        msg: format!("unknown variable x{idx} (ring has {} variables)", self.nvars),
                    });
                }
                let mut t = Terms::new();
                t.insert(Monomial::var(idx), BigRational::one());
                Ok(t)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(constant(BigRational::from_integer(v)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn constant(c: BigRational) -> Terms {
    let mut t = Terms::new();
    if !c.is_zero() {
        t.insert(Monomial::one(), c);
    }
    t
}

fn constant_value(t: &Terms) -> Option<BigRational> {
    match t.len() {
        0 => Some(BigRational::zero()),
        1 => t.get(&Monomial::one()).cloned(),
        _ => None,
    }
}

fn add_into(acc: &mut Terms, rhs: Terms, negate: bool) {
    for (m, c) in rhs {
        let c = if negate { -c } else { c };
        let e = acc.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            acc.remove(&m);
        }
    }
}

fn mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = ma.mul(mb);
            let e = out.entry(m).or_insert_with(BigRational::zero);
            *e += ca * cb;
            if e.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}
