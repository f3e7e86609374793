//! Rational functions p(u)/q(u), the coefficient field of the parametric
//! ring.
//!
//! Invariants, maintained by every constructor and operation:
//! - the denominator is nonzero,
//! - gcd(num, den) is constant (common polynomial factors removed),
//! - the denominator is integer-primitive with positive lex-leading
//!   coefficient (so `1/2` is stored as num = 1/2, den = 1, and the
//!   representation is canonical: equal functions compare equal).

use num::{Signed, Zero};
use std::fmt;

use super::parampoly::{param_gcd, ParamPoly, Rational, SubstPoint};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFun {
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFun {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: ParamPoly, den: ParamPoly) -> Self {
        debug_assert!(!den.is_zero());
        let m = num.nparams();
        if num.is_zero() {
            return RatFun {
                num,
                den: ParamPoly::one(m),
            };
        }
        let g = param_gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        // scale so den is integer-primitive with positive lex lead
        let mut c = den.content();
        if den.lex_lead().unwrap().1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        den = den.scale(&inv);
        num = num.scale(&inv);
        RatFun { num, den }
    }

    pub fn zero(nparams: usize) -> Self {
        RatFun {
            num: ParamPoly::zero(nparams),
            den: ParamPoly::one(nparams),
        }
    }

    pub fn one(nparams: usize) -> Self {
        RatFun {
            num: ParamPoly::one(nparams),
            den: ParamPoly::one(nparams),
        }
    }

    pub fn from_rational(nparams: usize, q: Rational) -> Self {
        RatFun {
            num: ParamPoly::constant(nparams, q),
            den: ParamPoly::one(nparams),
        }
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        let m = p.nparams();
        RatFun {
            num: p,
            den: ParamPoly::one(m),
        }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn nparams(&self) -> usize {
        self.num.nparams()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::normalized(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Evaluate at u -> alpha. Fails exactly when the stored denominator
    /// vanishes there.
    pub fn eval(&self, point: &SubstPoint, names: &[String]) -> Result<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::BadSubstitution {
                factor: self.den.to_string_with(names),
                context: format!("denominator vanishes at ({point})"),
            });
        }
        Ok(self.num.eval(point) / d)
    }

    /// Canonical text: `(p)/(q)`, or bare `p` when q = 1.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.to_string_with(names)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_with(names),
                self.den.to_string_with(names)
            )
        }
    }
}

impl fmt::Display for RatFun {
    /// Debug-oriented display with synthesized parameter names u1, u2, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nparams()).map(|i| format!("u{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}
