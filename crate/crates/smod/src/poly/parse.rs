//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr        := ['-'] term (('+' | '-') term)*
//! term        := factor ('*' factor)*
//! factor      := coefficient | name ['^' int] | '(' expr ')'
//! coefficient := int ['/' int] | '(' expr ')' '/' '(' expr ')'
//! ```
//!
//! Names resolve against the ring: ring variables become monomials,
//! parameters become coefficients. The quotient form requires both sides
//! to be free of ring variables, since only coefficients may be inverted.
//! Printing a polynomial and parsing it back is the identity.

use num::BigInt;

use super::coeff::Coefficient;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::scalar::Rational;

pub fn parse_poly<C: Coefficient>(ring: &Ring, text: &str) -> Result<Poly<C>> {
    let mut p = Parser {
        ring,
        bytes: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("end of input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a Ring,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, expected: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .map_or(false, |b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn expr<C: Coefficient>(&mut self) -> Result<Poly<C>> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<Poly<C>> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor<C: Coefficient>(&mut self) -> Result<Poly<C>> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => self.rational_factor(),
            Some(b) if b == b'_' || b.is_ascii_alphabetic() => self.name_factor(),
            Some(b'(') => self.paren_factor(),
            _ => Err(self.err("a number, name or `(`")),
        }
    }

    fn rational_factor<C: Coefficient>(&mut self) -> Result<Poly<C>> {
        let num = self.integer()?;
        let q = if self.peek() == Some(b'/')
            && self
                .bytes
                .get(self.after_ws(self.pos + 1))
                .map_or(false, |b| b.is_ascii_digit())
        {
            self.eat(b'/');
            let den = self.integer()?;
            if den == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Rational::new(num, den)
        } else {
            Rational::from_integer(num)
        };
        Ok(Poly::constant(
            self.ring,
            C::from_rational(self.ring.nparams(), q),
        ))
    }

    fn name_factor<C: Coefficient>(&mut self) -> Result<Poly<C>> {
        let start = self.pos;
        let name = self.name()?;
        let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
        if let Some(i) = self.ring.var_index(&name) {
            return Ok(Poly::<C>::var(self.ring, i).pow(exp));
        }
        if let Some(j) = self.ring.param_index(&name) {
            let p = crate::scalar::ParamPoly::var(self.ring.nparams(), j).pow(exp);
            let c = C::from_params(p).expect("ring with parameters has parametric coefficients");
            return Ok(Poly::constant(self.ring, c));
        }
        Err(Error::UnknownSymbol { name, pos: start })
    }

    fn paren_factor<C: Coefficient>(&mut self) -> Result<Poly<C>> {
        self.expect(b'(', "`(`")?;
        let num = self.expr()?;
        self.expect(b')', "`)`")?;
        if self.peek() != Some(b'/') {
            return Ok(num);
        }
        self.eat(b'/');
        self.expect(b'(', "`(` after `/`")?;
        let den_pos = self.pos;
        let den: Poly<C> = self.expr()?;
        self.expect(b')', "`)`")?;
        let nc = num.constant_value().ok_or_else(|| Error::Parse {
            pos: den_pos,
            expected: "a variable-free numerator left of `/`".to_string(),
        })?;
        let dc = den.constant_value().ok_or_else(|| Error::Parse {
            pos: den_pos,
            expected: "a variable-free denominator".to_string(),
        })?;
        if dc.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Poly::constant(self.ring, nc.mul(&dc.inv())))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .map_or(false, |b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|_| Error::Parse {
            pos: start,
            expected: "an integer".to_string(),
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            pos: start,
            expected: "an exponent fitting in 32 bits".to_string(),
        })
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).map_or(false, |b| {
            *b == b'_' || b.is_ascii_alphanumeric()
        }) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("a name"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }

    /// First non-whitespace position at or after `from`, for lookahead.
    fn after_ws(&self, from: usize) -> usize {
        let mut i = from;
        while self.bytes.get(i).map_or(false, |b| b.is_ascii_whitespace()) {
            i += 1;
        }
        i
    }
}
