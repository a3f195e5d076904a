//! Polynomial text grammar.
//!
//! ```text
//! poly   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//! varpow := name ('^' nat)?
//! coeff  := int | int '/' nat
//! ```

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Exps, Monomial};
use crate::poly::{Polynomial, RingRef};
use num::BigInt;

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_' || c == b'@') {
            return None;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'@')
        {
            self.bump();
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }
}

/// Parse a polynomial over the given ring.
pub fn parse_poly(ring: &RingRef, input: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(input);
    let p = parse_poly_at(ring, &mut cur)?;
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.err("trailing input after polynomial"));
    }
    Ok(p)
}

pub(crate) fn parse_poly_at(ring: &RingRef, cur: &mut Cursor) -> Result<Polynomial> {
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    cur.skip_ws();
    let mut sign_neg = match cur.peek() {
        Some(b'-') => {
            cur.bump();
            true
        }
        Some(b'+') => {
            cur.bump();
            false
        }
        _ => false,
    };
    loop {
        cur.skip_ws();
        let (m, c) = parse_term(ring, cur)?;
        let c = if sign_neg { ring.field().neg(&c) } else { c };
        terms.push((m, c));
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                sign_neg = false;
            }
            Some(b'-') => {
                cur.bump();
                sign_neg = true;
            }
            _ => break,
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(ring: &RingRef, cur: &mut Cursor) -> Result<(Monomial, Coeff)> {
    let field = ring.field();
    let mut coeff = field.one();
    let mut exps = vec![0u32; ring.nvars()];
    let mut saw_factor = false;

    if matches!(cur.peek(), Some(b'0'..=b'9')) {
        let num = cur.integer()?;
        let den = if cur.peek() == Some(b'/') {
            cur.bump();
            cur.integer()?
        } else {
            BigInt::from(1)
        };
        coeff = field
            .from_ratio(&num, &den)
            .ok_or_else(|| cur.err("invalid coefficient"))?;
        saw_factor = true;
    }

    loop {
        cur.skip_ws();
        if saw_factor {
            if cur.peek() == Some(b'*') {
                cur.bump();
                cur.skip_ws();
            } else {
                break;
            }
        }
        let name = match cur.ident() {
            Some(n) => n,
            None => {
                if saw_factor {
                    return Err(cur.err("expected variable after `*`"));
                }
                return Err(cur.err("expected term"));
            }
        };
        let idx = ring
            .find_var(&name)
            .ok_or_else(|| cur.err(format!("unknown variable `{}`", name)))?;
        let e: u32 = if cur.peek() == Some(b'^') {
            cur.bump();
            let n = cur.integer()?;
            n.try_into().map_err(|_| cur.err("exponent too large"))?
        } else {
            1
        };
        exps[idx] += e;
        saw_factor = true;
    }
    Ok((Monomial::from_exps(Exps::from_vec(exps)), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::poly::{PolyRing, RingOps};

    fn ring() -> RingRef {
        PolyRing::new(
            Field::Rational,
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn parse_simple() {
        let r = ring();
        let p = parse_poly(&r, "x^2 + y").unwrap();
        assert_eq!(p, r.var(0).pow(2).add(&r.var(1)));
    }

    #[test]
    fn parse_signs_and_rationals() {
        let r = ring();
        let p = parse_poly(&r, "-3/2*x*y + 1").unwrap();
        let expect = r
            .var(0)
            .mul(&r.var(1))
            .scalar_mul(&r.field().from_ratio(&(-3).into(), &2.into()).unwrap())
            .add(&r.one());
        assert_eq!(p, expect);
    }

    #[test]
    fn roundtrip_display() {
        let r = ring();
        for s in ["x^2 + y", "-x + 2*y", "1/2*x^3 - y^2 + 7", "0"] {
            let p = parse_poly(&r, s).unwrap();
            let q = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn unknown_variable_rejected() {
        let r = ring();
        assert!(parse_poly(&r, "z + 1").is_err());
    }
}
