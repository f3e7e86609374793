//! Polynomials in the parameters u_1..u_m with rational coefficients.
//!
//! These live in the coefficient field Q(u_1..u_m) as numerators and
//! denominators, and in substitution certificates as factors that must not
//! vanish. Terms are kept in a BTreeMap keyed by exponent vector, so the
//! natural map order is lex on exponents. No term order parameter here:
//! lex is all the scalar layer ever needs.
//!
//! Invariants:
//! - every stored coefficient is nonzero,
//! - every exponent vector has length `nparams`.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parse an integer or `a/b` literal into a rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::input(format!("bad rational literal `{text}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::input(format!("bad rational literal `{text}`")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// Print a rational as `a` or `a/b`.
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A point u -> alpha in Q^m at which parametric objects are evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubstPoint {
    values: Vec<Rational>,
}

impl SubstPoint {
    pub fn new(values: Vec<Rational>) -> Self {
        SubstPoint { values }
    }

    /// Parse a comma-separated list of rational literals, e.g. `2,-1/3`.
    pub fn parse(text: &str, nparams: usize) -> Result<Self> {
        let trimmed = text.trim();
        let values: Vec<Rational> = if trimmed.is_empty() {
            Vec::new()
        } else {
            trimmed
                .split(',')
                .map(parse_rational)
                .collect::<Result<_>>()?
        };
        if values.len() != nparams {
            return Err(Error::input(format!(
                "substitution point has {} coordinates, ring has {} parameters",
                values.len(),
                nparams
            )));
        }
        Ok(SubstPoint { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for SubstPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(rational_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPoly {
    nparams: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ParamPoly {
    pub fn zero(nparams: usize) -> Self {
        ParamPoly {
            nparams,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nparams: usize) -> Self {
        Self::constant(nparams, Rational::one())
    }

    pub fn constant(nparams: usize, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(vec![0; nparams], q);
        }
        ParamPoly { nparams, terms }
    }

    /// The single parameter u_i.
    pub fn var(nparams: usize, i: usize) -> Self {
        assert!(i < nparams, "parameter index out of range");
        let mut exp = vec![0u32; nparams];
        exp[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rational::one());
        ParamPoly { nparams, terms }
    }

    pub fn from_terms(
        nparams: usize,
        entries: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exp, c) in entries {
            assert_eq!(exp.len(), nparams, "exponent arity mismatch");
            let slot = terms.entry(exp).or_insert_with(Rational::zero);
            *slot += c;
        }
        terms.retain(|_, c| !c.is_zero());
        ParamPoly { nparams, terms }
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant()
            && self
                .terms
                .values()
                .next()
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().iter().all(|&e| e == 0),
            _ => false,
        }
    }

    /// The constant value when `is_constant`, else None.
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Leading term under lex on exponent vectors.
    pub fn lex_lead(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nparams, other.nparams);
        let mut terms = self.terms.clone();
        for (exp, c) in &other.terms {
            let slot = terms.entry(exp.clone()).or_insert_with(Rational::zero);
            *slot += c;
        }
        terms.retain(|_, c| !c.is_zero());
        ParamPoly {
            nparams: self.nparams,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            nparams: self.nparams,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nparams, other.nparams);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = terms.entry(exp).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ParamPoly {
            nparams: self.nparams,
            terms,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.nparams);
        }
        ParamPoly {
            nparams: self.nparams,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nparams);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a point. Total since denominators do not exist here.
    pub fn eval(&self, point: &SubstPoint) -> Rational {
        assert_eq!(point.len(), self.nparams, "substitution arity mismatch");
        let mut acc = Rational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    term *= &point.values()[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Exact division; None when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nparams, d.nparams);
        if d.is_zero() {
            return None;
        }
        let (dexp, dc) = d.lex_lead().unwrap();
        let dexp = dexp.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        while !rem.is_zero() {
            let (rexp, rc) = rem.lex_lead().unwrap();
            if !dexp.iter().zip(rexp).all(|(a, b)| a <= b) {
                return None;
            }
            let qexp: Vec<u32> = rexp.iter().zip(&dexp).map(|(a, b)| a - b).collect();
            let qc = rc / &dc;
            let t = ParamPoly::from_terms(self.nparams, [(qexp.clone(), qc.clone())]);
            rem = rem.sub(&t.mul(d));
            let slot = quot.entry(qexp).or_insert_with(Rational::zero);
            *slot += qc;
        }
        quot.retain(|_, c| !c.is_zero());
        Some(ParamPoly {
            nparams: self.nparams,
            terms: quot,
        })
    }

    /// Rational content: the positive rational c with `self = c * P` for a
    /// primitive integer polynomial P. Zero polynomial has content 0.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// `self / content`, additionally signed so the lex-leading coefficient
    /// is positive. Returns zero for zero.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lex_lead().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Coefficients with respect to one parameter, by ascending degree.
    /// Entry i has the exponent of `var` zeroed out.
    fn coeffs_in(&self, var: usize) -> Vec<ParamPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![ParamPoly::zero(self.nparams); deg + 1];
        for (exp, c) in &self.terms {
            let d = exp[var] as usize;
            let mut e = exp.clone();
            e[var] = 0;
            let slot = out[d].terms.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
        for p in &mut out {
            p.terms.retain(|_, c| !c.is_zero());
        }
        out
    }

    fn from_coeffs_in(nparams: usize, var: usize, coeffs: &[ParamPoly]) -> Self {
        let mut acc = ParamPoly::zero(nparams);
        for (d, c) in coeffs.iter().enumerate() {
            let mut shifted = c.clone();
            shifted.terms = shifted
                .terms
                .into_iter()
                .map(|(mut e, q)| {
                    e[var] += d as u32;
                    (e, q)
                })
                .collect();
            acc = acc.add(&shifted);
        }
        acc
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nparams);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (exp, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || exp.iter().all(|&e| e == 0) {
                pieces.push(rational_string(&mag));
            }
            for (i, &e) in exp.iter().enumerate() {
                if e == 1 {
                    pieces.push(names[i].clone());
                } else if e > 1 {
                    pieces.push(format!("{}^{}", names[i], e));
                }
            }
            out.push_str(&pieces.join("*"));
        }
        out
    }
}

/// Pseudo-remainder of univariate views (coefficient vectors by ascending
/// degree, empty = zero): lc(b)^k * a = q*b + r with deg r < deg b.
fn pseudo_rem(a: &[ParamPoly], b: &[ParamPoly], _nparams: usize) -> Vec<ParamPoly> {
    let db = b.len() - 1;
    let lcb = b[db].clone();
    let mut r: Vec<ParamPoly> = a.to_vec();
    while r.last().map_or(false, |l| l.is_zero()) {
        r.pop();
    }
    while r.len() > db {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        // r := lc(b) * r - lead * x^(dr-db) * b
        for coeff in &mut r {
            *coeff = coeff.mul(&lcb);
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = r[idx].sub(&lead.mul(bc));
        }
        while r.last().map_or(false, |l| l.is_zero()) {
            r.pop();
        }
    }
    r
}

/// Gcd in Q[u_1..u_m], normalized to be integer-primitive with positive
/// lex-leading coefficient. Content/primitive-part recursion, one main
/// variable at a time, pseudo-remainders underneath.
pub fn param_gcd(p: &ParamPoly, q: &ParamPoly) -> ParamPoly {
    assert_eq!(p.nparams, q.nparams);
    let nparams = p.nparams;
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    if p.is_constant() || q.is_constant() {
        return ParamPoly::one(nparams);
    }
    // main variable: the first parameter that actually appears
    let var = (0..nparams)
        .find(|&v| p.degree_in(v) > 0 || q.degree_in(v) > 0)
        .expect("nonconstant polynomial has an active variable");
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        // one side is free of the main variable: gcd divides its
        // coefficients' gcd with respect to var
        let (free, other) = if p.degree_in(var) == 0 { (p, q) } else { (q, p) };
        let mut acc = free.clone();
        for c in other.coeffs_in(var) {
            if c.is_zero() {
                continue;
            }
            acc = param_gcd(&acc, &c);
            if acc.is_constant() {
                return ParamPoly::one(nparams);
            }
        }
        return acc.primitive_part();
    }

    let gcd_many = |polys: &[ParamPoly]| -> ParamPoly {
        let mut acc = ParamPoly::zero(nparams);
        for c in polys {
            if c.is_zero() {
                continue;
            }
            acc = param_gcd(&acc, c);
        }
        acc
    };
    let pp_of = |coeffs: &[ParamPoly]| -> (ParamPoly, Vec<ParamPoly>) {
        let cont = gcd_many(coeffs);
        let prim: Vec<ParamPoly> = coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    c.clone()
                } else {
                    c.div_exact(&cont).expect("content divides coefficients")
                }
            })
            .collect();
        (cont, prim)
    };

    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let (cont_p, pp_p) = pp_of(&pc);
    let (cont_q, pp_q) = pp_of(&qc);
    let cont_gcd = param_gcd(&cont_p, &cont_q);

    let (mut a, mut b) = if pp_p.len() >= pp_q.len() {
        (pp_p, pp_q)
    } else {
        (pp_q, pp_p)
    };
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b, nparams);
        a = b;
        if r.is_empty() {
            b = Vec::new();
        } else {
            let (_, prim) = pp_of(&r);
            b = prim;
        }
    }
    let g_main = ParamPoly::from_coeffs_in(nparams, var, &a);
    cont_gcd.mul(&g_main.primitive_part()).primitive_part()
}

/// Order used to keep certificate factor sets canonical: degree, then the
/// term map itself.
pub fn factor_cmp(a: &ParamPoly, b: &ParamPoly) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: usize, m: usize) -> ParamPoly {
        ParamPoly::var(m, i)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn constant_and_var_shapes() {
        let m = 2;
        assert!(ParamPoly::zero(m).is_zero());
        assert!(ParamPoly::one(m).is_one());
        assert!(ParamPoly::constant(m, q(0)).is_zero());
        assert_eq!(u(0, m).degree_in(0), 1);
        assert_eq!(u(0, m).degree_in(1), 0);
    }

    #[test]
    fn div_exact_against_multiplication() {
        // (u1^2 - 1) / (u1 - 1) = u1 + 1, checked by multiplying back
        let m = 1;
        let p = u(0, m).mul(&u(0, m)).sub(&ParamPoly::one(m));
        let d = u(0, m).sub(&ParamPoly::one(m));
        let quot = p.div_exact(&d).expect("divides");
        assert_eq!(quot, u(0, m).add(&ParamPoly::one(m)));
        assert_eq!(quot.mul(&d), p);
        // non-divisible case
        assert!(p.div_exact(&u(0, m).add(&ParamPoly::one(m).scale(&q(2)))).is_none());
    }

    #[test]
    fn eval_rational_point() {
        // (u1^2 - u2) at (3, 2) = 7
        let m = 2;
        let p = u(0, m).mul(&u(0, m)).sub(&u(1, m));
        let pt = SubstPoint::new(vec![q(3), q(2)]);
        assert_eq!(p.eval(&pt), q(7));
    }

    #[test]
    fn gcd_univariate() {
        // gcd(u1^2 - 1, u1 - 1) = u1 - 1, and it divides both inputs
        let m = 1;
        let p = u(0, m).mul(&u(0, m)).sub(&ParamPoly::one(m));
        let d = u(0, m).sub(&ParamPoly::one(m));
        let g = param_gcd(&p, &d);
        assert_eq!(g, d);
        assert!(p.div_exact(&g).is_some());
        assert!(d.div_exact(&g).is_some());
    }

    #[test]
    fn gcd_bivariate_common_factor() {
        // gcd(u1*u2 + u2, u1^2 - 1) = u1 + 1
        let m = 2;
        let a = u(0, m).mul(&u(1, m)).add(&u(1, m));
        let b = u(0, m).mul(&u(0, m)).sub(&ParamPoly::one(m));
        let g = param_gcd(&a, &b);
        assert_eq!(g, u(0, m).add(&ParamPoly::one(m)));
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let m = 2;
        let a = u(0, m).add(&ParamPoly::one(m));
        let b = u(1, m).sub(&ParamPoly::one(m));
        assert!(param_gcd(&a, &b).is_one());
    }

    #[test]
    fn primitive_part_normalization() {
        // -4/6*u1 + 2/6 has content 1/3 and negative lead: primitive part
        // is 2*u1 - 1
        let m = 1;
        let p = u(0, m)
            .scale(&Rational::new((-4).into(), 6.into()))
            .add(&ParamPoly::constant(m, Rational::new(2.into(), 6.into())));
        let pp = p.primitive_part();
        let expect = u(0, m).scale(&q(2)).sub(&ParamPoly::one(m));
        assert_eq!(pp, expect);
    }

    #[test]
    fn printing_matches_expected_layout() {
        let m = 2;
        let names = vec!["u1".to_string(), "u2".to_string()];
        let p = u(0, m)
            .mul(&u(0, m))
            .scale(&q(3))
            .sub(&u(1, m))
            .add(&ParamPoly::one(m));
        assert_eq!(p.to_string_with(&names), "3*u1^2 - u2 + 1");
        assert_eq!(ParamPoly::zero(m).to_string_with(&names), "0");
    }

    #[test]
    fn subst_point_parse_roundtrip() {
        let pt = SubstPoint::parse("2,-1/3", 2).unwrap();
        assert_eq!(pt.to_string(), "2,-1/3");
        assert!(SubstPoint::parse("1", 2).is_err());
        assert!(SubstPoint::parse("1,0", 2).is_ok());
    }
}
