//! Sparse polynomials over a coefficient field.
//!
//! Terms are kept strictly descending under the ring's term order, so the
//! leading term is the first entry and equality is plain structural
//! equality. Every constructor and operation restores that normal form.
//! Arithmetic panics on ring mismatch (a programming error); the checked
//! entry points that user data flows through validate rings up front and
//! return `Error::RingMismatch` instead.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::coeff::{CoeffText, Coefficient};
use super::monomial::{Monomial, MonomialOrder};
use super::ring::{ensure_same_ring, same_ring, Ring};
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct Poly<C: Coefficient> {
    ring: Ring,
    /// (monomial, coefficient), strictly descending in ring order,
    /// coefficients nonzero.
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> Poly<C> {
    pub fn zero(ring: &Ring) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, C::one(ring.nparams()))
    }

    pub fn constant(ring: &Ring, c: C) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.nvars()), c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Poly {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), C::one(ring.nparams()))],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: C) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Ring, entries: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let order = ring.order();
        let mut terms: Vec<(Monomial, C)> = entries.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        }
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.add(&c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms[0].0.is_one(),
            _ => false,
        }
    }

    /// The constant value when `is_constant`, else None.
    pub fn constant_value(&self) -> Option<C> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .first()
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| C::zero(self.ring.nparams())),
        )
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn lead(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[i] > 0)
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "ring mismatch in polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let order = self.ring.order();
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Poly::from_terms(&self.ring, prods)
    }

    /// self * c * x^m, the workhorse of reduction steps.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        if m.is_one() {
            return self.scale(c);
        }
        // multiplying by a monomial preserves the descending order
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, tc)| (m.clone(), tc.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient. Panics on zero.
    pub fn monic(&self) -> Self {
        let lc = self.lead_coeff().expect("monic of zero polynomial");
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.inv())
    }

    /// Exact division; None when `d` does not divide `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.assert_compatible(d);
        if d.is_zero() {
            return None;
        }
        let order = self.ring.order();
        let (dm, dc) = d.lead().unwrap();
        let dm = dm.clone();
        let dc_inv = dc.inv();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.lead().unwrap();
                (m.clone(), c.clone())
            };
            let qm = dm.div_into(&rm)?;
            let qc = rc.mul(&dc_inv);
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
            debug_assert!(rem
                .lead_monomial()
                .map_or(true, |m| order.cmp(m, &rm) == Ordering::Less));
        }
        Some(Poly::from_terms(&self.ring, quot))
    }

    pub fn map_coeffs<D: Coefficient>(
        &self,
        ring: &Ring,
        mut f: impl FnMut(&C) -> D,
    ) -> Poly<D> {
        Poly::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    pub fn try_map_coeffs<D: Coefficient, E>(
        &self,
        ring: &Ring,
        mut f: impl FnMut(&C) -> std::result::Result<D, E>,
    ) -> std::result::Result<Poly<D>, E> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            out.push((m.clone(), f(c)?));
        }
        Ok(Poly::from_terms(ring, out))
    }

    /// Reinterpret in a structurally different ring with the same variable
    /// count (typically: another order). Terms are re-sorted.
    pub fn with_ring(&self, ring: &Ring) -> Result<Self> {
        if same_ring(&self.ring, ring) {
            return Ok(self.clone());
        }
        if ring.nvars() != self.ring.nvars() || ring.nparams() != self.ring.nparams() {
            ensure_same_ring(&self.ring, ring)?;
        }
        Ok(Poly::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    /// Embed into a ring with extra variables prepended.
    pub fn prefix_extend(&self, ring: &Ring) -> Self {
        let extra = ring.nvars() - self.ring.nvars();
        Poly::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u32; extra];
                e.extend_from_slice(m.exps());
                (Monomial::from_exps(e), c.clone())
            }),
        )
    }

    /// Drop the first `k` variables; defined when none of them appear.
    pub fn prefix_drop(&self, ring: &Ring, k: usize) -> Option<Self> {
        for (m, _) in &self.terms {
            if m.exps()[..k].iter().any(|&e| e > 0) {
                return None;
            }
        }
        Some(Poly::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_exps(m.exps()[k..].to_vec()), c.clone())),
        ))
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let params = self.ring.params();
        let vars = self.ring.vars();
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.sign_split();
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
            match mag.render(params) {
                CoeffText::One => {}
                CoeffText::Product(s) => pieces.push(s),
                CoeffText::Wrapped(s) => pieces.push(s),
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    pieces.push(vars[i].clone());
                } else if e > 1 {
                    pieces.push(format!("{}^{}", vars[i], e));
                }
            }
            if pieces.is_empty() {
                out.push('1');
            } else {
                out.push_str(&pieces.join("*"));
            }
        }
        out
    }
}

impl<C: Coefficient> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for Poly<C> {}

impl<C: Coefficient> Hash for Poly<C> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.vars().hash(state);
        self.terms.hash(state);
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::RingData;
    use crate::scalar::{RatFun, Rational};
    use proptest::prelude::*;

    fn ring2() -> Ring {
        RingData::rational(&["x1", "x2"], MonomialOrder::GrevLex)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x(r: &Ring, i: usize) -> Poly<Rational> {
        Poly::var(r, i)
    }

    #[test]
    fn normal_form_is_sorted_and_merged() {
        let r = ring2();
        let p = Poly::from_terms(
            &r,
            vec![
                (Monomial::from_exps(vec![0, 0]), q(1)),
                (Monomial::from_exps(vec![2, 0]), q(1)),
                (Monomial::from_exps(vec![1, 1]), q(2)),
                (Monomial::from_exps(vec![1, 1]), q(-2)),
            ],
        );
        // the x1*x2 terms cancel; lead is x1^2 under grevlex
        assert_eq!(p.nterms(), 2);
        assert_eq!(p.lead_monomial().unwrap(), &Monomial::from_exps(vec![2, 0]));
        assert_eq!(p.render(), "x1^2 + 1");
    }

    #[test]
    fn arithmetic_small_cases() {
        let r = ring2();
        let a = x(&r, 0).add(&x(&r, 1)); // x1 + x2
        let b = x(&r, 0).sub(&x(&r, 1)); // x1 - x2
        let prod = a.mul(&b);
        let sq = x(&r, 0).mul(&x(&r, 0)).sub(&x(&r, 1).mul(&x(&r, 1)));
        assert_eq!(prod, sq);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.render(), "x1 + x2");
        assert_eq!(prod.render(), "x1^2 - x2^2");
    }

    #[test]
    fn div_exact_roundtrip() {
        let r = ring2();
        let a = x(&r, 0).add(&x(&r, 1));
        let b = x(&r, 0).pow(2).add(&Poly::one(&r));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn monic_divides_by_lead() {
        let r = ring2();
        let p = x(&r, 0).scale(&q(3)).add(&Poly::one(&r));
        let m = p.monic();
        assert!(m.lead_coeff().unwrap().is_one());
        assert_eq!(m.scale(&q(3)), p);
        assert_eq!(m.render(), "x1 + 1/3");
    }

    #[test]
    fn prefix_embed_and_drop() {
        let r = ring2();
        let ext = r.with_elim_prefix("t0").unwrap();
        let p = x(&r, 0).add(&Poly::one(&r));
        let lifted = p.prefix_extend(&ext);
        assert_eq!(lifted.render(), "x1 + 1");
        assert_eq!(lifted.prefix_drop(&r, 1), Some(p));
        let t = Poly::<Rational>::var(&ext, 0);
        assert_eq!(t.prefix_drop(&r, 1), None);
    }

    #[test]
    fn ratfun_coefficients_render() {
        let r = RingData::parametric(&["u1"], &["x1", "x2"], MonomialOrder::GrevLex);
        let u1 = RatFun::from_poly(crate::scalar::ParamPoly::var(1, 0));
        let p = Poly::var(&r, 0)
            .scale(&u1)
            .add(&Poly::constant(&r, u1.inv().unwrap()).neg());
        assert_eq!(p.render(), "u1*x1 - (1)/(u1)");
    }

    fn arb_poly(r: Ring) -> impl Strategy<Value = Poly<Rational>> {
        let n = r.nvars();
        prop::collection::vec(
            (prop::collection::vec(0u32..4, n), -4i64..5),
            0..6,
        )
        .prop_map(move |terms| {
            Poly::from_terms(
                &r,
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::from_exps(e), q(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn distributive(
            a in arb_poly(ring2()),
            b in arb_poly(ring2()),
            c in arb_poly(ring2()),
        ) {
            let lhs = a.mul(&b.add(&c));
            let rhs = a.mul(&b).add(&a.mul(&c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_then_divide(
            a in arb_poly(ring2()),
            b in arb_poly(ring2()),
        ) {
            prop_assume!(!a.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.div_exact(&a), Some(b));
        }
    }
}
