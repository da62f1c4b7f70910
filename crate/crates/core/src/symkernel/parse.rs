//! Polynomial text format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Identifiers match `[A-Za-z_][A-Za-z0-9_]*`; whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::mono::Mono;
use super::poly::Poly;
use super::ring::PolyRing;
use super::Rat;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return self.err("negative exponent");
            }
            let e = self.integer()?;
            let e: u32 = match u32::try_from(e) {
                Ok(e) if e <= 10_000 => e,
                _ => return self.err("exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.ring.nvars();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut val = Rat::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    val /= Rat::from_integer(den);
                }
                Ok(Poly::constant(n, val))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Poly::var(n, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into its canonical normal form over `ring`.
pub fn poly_parse(text: &str, ring: &PolyRing) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

fn format_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_mono(m: &Mono, names: &[String]) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                names[i].clone()
            } else {
                format!("{}^{}", names[i], e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text form; `poly_parse` inverts it.
pub fn format_poly(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        let body = if m.is_one() {
            format_rat(&a)
        } else if a.is_one() {
            format_mono(m, names)
        } else {
            format!("{}*{}", format_rat(&a), format_mono(m, names))
        };
        match (k, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body)
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body)
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body)
            }
        }
    }
    out
}

impl PolyRing {
    pub fn parse(&self, text: &str) -> Result<Poly> {
        poly_parse(text, self)
    }

    pub fn format(&self, p: &Poly) -> String {
        let names: Vec<String> = self.names().map(str::to_string).collect();
        format_poly(p, &names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> std::sync::Arc<PolyRing> {
        PolyRing::base(&["x", "y"]).unwrap()
    }

    #[test]
    fn reads_terms() {
        let r = ring();
        let p = r.parse("x^2 - 2*x*y").unwrap();
        let terms: Vec<(Vec<u16>, Rat)> = p.terms().iter().map(|(m, c)| (m.0.to_vec(), c.clone())).collect();
        assert_eq!(
            terms,
            vec![
                (vec![2, 0], Rat::one()),
                (vec![1, 1], Rat::from_integer((-2).into()))
            ]
        );
    }

    #[test]
    fn zero_and_binomial_identity() {
        let r = ring();
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("(x+y)^2 - x^2 - y^2 - 2*x*y").unwrap().is_zero());
    }

    #[test]
    fn rationals_and_unary_minus() {
        let r = ring();
        let p = r.parse("-3/6*x + -(-y)").unwrap();
        assert_eq!(r.format(&p), "-1/2*x + y");
    }

    #[test]
    fn errors() {
        let r = ring();
        assert_eq!(r.parse("x + z"), Err(Error::UnknownVariable("z".into())));
        assert!(matches!(r.parse("x + * y"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(r.parse("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("x y"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("1/0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn format_roundtrip_simple() {
        let r = ring();
        for s in ["x^2*y - 7/3*x + 1", "-x", "0", "5", "-2*y^3 + x*y"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
        }
    }
}
