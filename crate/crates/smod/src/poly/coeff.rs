//! The coefficient-field abstraction.
//!
//! Groebner bases, module calculus and homology are written once against
//! this trait and instantiated twice: `Rational` for Q[x...] and `RatFun`
//! for Q(u...)[x...]. The two `note_*` hooks are how substitution
//! certificates get built: rational-function coefficients record their
//! denominators whenever they participate in a tracked computation and
//! their numerators whenever they are inverted, while plain rationals
//! record nothing. Code above this layer never matches on the mode.

use num::{One, Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;

use crate::cert::Certificate;
use crate::scalar::{rational_string, ParamPoly, RatFun, Rational};

/// How a coefficient renders inside a term of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffText {
    /// Magnitude 1: elided in front of a variable part.
    One,
    /// A bare factor product like `3`, `1/2` or `2*u1^2` that can sit in
    /// a term without parentheses.
    Product(String),
    /// A parenthesized form like `(u1 + 1)` or `(u1 - 1)/(u1)`.
    Wrapped(String),
}

pub trait Coefficient:
    Clone + PartialEq + Eq + PartialOrd + Ord + Hash + Debug + Send + Sync + 'static
{
    fn zero(nparams: usize) -> Self;
    fn one(nparams: usize) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Callers guarantee the value is nonzero.
    fn inv(&self) -> Self;

    fn from_rational(nparams: usize, q: Rational) -> Self;
    /// Embed a polynomial in the parameters; None in rational mode, where
    /// no parameters exist.
    fn from_params(p: ParamPoly) -> Option<Self>;

    /// Record the constraints that make this value well defined after
    /// substitution (denominators).
    fn note_use(&self, cert: &mut Certificate);
    /// Record the constraints that keep this value invertible after
    /// substitution (numerator and denominator).
    fn note_inverted(&self, cert: &mut Certificate);

    /// Split into a canonical sign and magnitude for printing, such that
    /// printing the magnitude and re-applying the sign reparses to the
    /// original value.
    fn sign_split(&self) -> (bool, Self);
    /// Render the magnitude with the given parameter names.
    fn render(&self, params: &[String]) -> CoeffText;

    fn mode_name() -> &'static str;
}

impl Coefficient for Rational {
    fn zero(_nparams: usize) -> Self {
        <Rational as Zero>::zero()
    }

    fn one(_nparams: usize) -> Self {
        <Rational as One>::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Self {
        debug_assert!(!Zero::is_zero(self));
        self.recip()
    }

    fn from_rational(_nparams: usize, q: Rational) -> Self {
        q
    }

    fn from_params(_p: ParamPoly) -> Option<Self> {
        None
    }

    fn note_use(&self, _cert: &mut Certificate) {}

    fn note_inverted(&self, _cert: &mut Certificate) {}

    fn sign_split(&self) -> (bool, Self) {
        if self.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    fn render(&self, _params: &[String]) -> CoeffText {
        if One::is_one(self) {
            CoeffText::One
        } else {
            CoeffText::Product(rational_string(self))
        }
    }

    fn mode_name() -> &'static str {
        "rational"
    }
}

impl Coefficient for RatFun {
    fn zero(nparams: usize) -> Self {
        RatFun::zero(nparams)
    }

    fn one(nparams: usize) -> Self {
        RatFun::one(nparams)
    }

    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }

    fn is_one(&self) -> bool {
        RatFun::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        RatFun::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        RatFun::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        RatFun::mul(self, other)
    }

    fn neg(&self) -> Self {
        RatFun::neg(self)
    }

    fn inv(&self) -> Self {
        RatFun::inv(self).expect("inverse of nonzero rational function")
    }

    fn from_rational(nparams: usize, q: Rational) -> Self {
        RatFun::from_rational(nparams, q)
    }

    fn from_params(p: ParamPoly) -> Option<Self> {
        Some(RatFun::from_poly(p))
    }

    fn note_use(&self, cert: &mut Certificate) {
        if !self.den().is_constant() {
            cert.register(self.den());
        }
    }

    fn note_inverted(&self, cert: &mut Certificate) {
        debug_assert!(!RatFun::is_zero(self));
        if !self.num().is_constant() {
            cert.register(self.num());
        }
        if !self.den().is_constant() {
            cert.register(self.den());
        }
    }

    fn sign_split(&self) -> (bool, Self) {
        let neg = self
            .num()
            .lex_lead()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if neg {
            (true, RatFun::neg(self))
        } else {
            (false, self.clone())
        }
    }

    fn render(&self, params: &[String]) -> CoeffText {
        if RatFun::is_one(self) {
            return CoeffText::One;
        }
        if self.den().is_one() {
            let mut terms = self.num().terms();
            if let (Some((exp, c)), None) = (terms.next(), terms.next()) {
                // single-term numerator prints inline: c*u1^e*...
                let mut pieces: Vec<String> = Vec::new();
                if !One::is_one(c) || exp.iter().all(|&e| e == 0) {
                    pieces.push(rational_string(c));
                }
                for (i, &e) in exp.iter().enumerate() {
                    if e == 1 {
                        pieces.push(params[i].clone());
                    } else if e > 1 {
                        pieces.push(format!("{}^{}", params[i], e));
                    }
                }
                return CoeffText::Product(pieces.join("*"));
            }
            return CoeffText::Wrapped(format!("({})", self.num().to_string_with(params)));
        }
        CoeffText::Wrapped(self.to_string_with(params))
    }

    fn mode_name() -> &'static str {
        "ratfun"
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::SubstPoint;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rational_mode_records_nothing() {
        let mut cert = Certificate::new(0);
        let half = Rational::new(1.into(), 2.into());
        half.note_use(&mut cert);
        half.note_inverted(&mut cert);
        assert!(cert.is_empty());
    }

    #[test]
    fn ratfun_mode_records_denominator_and_inverse() {
        let m = 1;
        let u1 = ParamPoly::var(m, 0);
        let f = RatFun::new(u1.sub(&ParamPoly::one(m)), u1.clone()).unwrap();
        let mut cert = Certificate::new(m);
        f.note_use(&mut cert);
        assert!(cert.mentions(&u1));
        assert_eq!(cert.len(), 1);
        f.note_inverted(&mut cert);
        assert!(cert.mentions(&u1.sub(&ParamPoly::one(m))));
        assert_eq!(cert.len(), 2);
        // the recorded set is exactly what eval needs
        assert!(!cert.is_good(&SubstPoint::new(vec![q(0)])));
        assert!(!cert.is_good(&SubstPoint::new(vec![q(1)])));
        assert!(cert.is_good(&SubstPoint::new(vec![q(2)])));
    }

    #[test]
    fn sign_split_is_canonical() {
        let m = 1;
        let u1 = ParamPoly::var(m, 0);
        let f = RatFun::new(u1.neg().add(&ParamPoly::one(m)), u1.clone()).unwrap();
        let (neg, mag) = f.sign_split();
        assert!(neg);
        let (neg2, mag2) = mag.sign_split();
        assert!(!neg2);
        assert_eq!(mag, mag2);
        assert_eq!(mag.neg(), f);
    }

    #[test]
    fn render_forms() {
        let names = vec!["u1".to_string()];
        let m = 1;
        let u1 = ParamPoly::var(m, 0);
        assert_eq!(RatFun::one(m).render(&names), CoeffText::One);
        assert_eq!(
            RatFun::from_poly(u1.clone()).render(&names),
            CoeffText::Product("u1".into())
        );
        assert_eq!(
            RatFun::from_poly(u1.scale(&q(3)).mul(&u1)).render(&names),
            CoeffText::Product("3*u1^2".into())
        );
        assert_eq!(
            RatFun::from_poly(u1.add(&ParamPoly::one(m))).render(&names),
            CoeffText::Wrapped("(u1 + 1)".into())
        );
        assert_eq!(
            RatFun::new(ParamPoly::one(m), u1.clone()).unwrap().render(&names),
            CoeffText::Wrapped("(1)/(u1)".into())
        );
        assert_eq!(q(5).render(&[]), CoeffText::Product("5".into()));
        assert_eq!(q(1).render(&[]), CoeffText::One);
    }
}
