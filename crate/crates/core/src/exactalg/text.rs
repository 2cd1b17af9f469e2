//! Parser for the canonical text form of polynomials.
//!
//! Grammar (whitespace ignored between tokens):
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | name ['^' integer] | '(' poly ')' ['^' integer]
//! ```

use num_bigint::BigInt;

use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

pub(crate) fn parse_poly(ring: &Ring, text: &str) -> Result<Poly> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ring);
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
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
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().expect("digits parse"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            u32::try_from(e).map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let c = self.ring.coeff_ring().from_bigint(&v);
                Ok(Poly::term(self.ring, self.ring.unit_monomial(), c))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let var = self.ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                let e = self.exponent()?;
                let mut exps = vec![0u32; self.ring.nvars()];
                exps[var] = e;
                Ok(Poly::monomial(self.ring, self.ring.monomial(&exps)))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{CoeffRing, PolyRing};

    #[test]
    fn canonical_text_roundtrips() {
        let r = PolyRing::indexed("t", 1, 3, CoeffRing::F2).unwrap();
        for s in ["t1*t2 + t1*t3 + t2*t3", "0", "1", "t1^3 + t2*t3 + t1 + 1"] {
            assert_eq!(Poly::parse(&r, s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn parenthesised_powers() {
        let r = PolyRing::standard(&["x", "y"], CoeffRing::Integers).unwrap();
        let p = Poly::parse(&r, "(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(p.to_string(), "x^2 + y^2");
    }

    #[test]
    fn errors_report_position() {
        let r = PolyRing::standard(&["x"], CoeffRing::F2).unwrap();
        assert!(matches!(Poly::parse(&r, "x +"), Err(Error::Parse { .. })));
        assert!(matches!(Poly::parse(&r, "z"), Err(Error::UnknownVariable(_))));
        assert!(matches!(Poly::parse(&r, "x x"), Err(Error::Parse { pos: 2, .. })));
    }
}
