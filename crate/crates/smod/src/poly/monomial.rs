//! Monomials in the ring variables and the supported term orders.
//!
//! A monomial is just its exponent vector; names live in the ring
//! descriptor. Three global orders are supported. 1 is minimal in each,
//! and each respects multiplication, which the property tests pin down.
//!
//! - `GrevLex`: total degree first, ties by smaller exponent in the last
//!   differing variable (the usual graded reverse lexicographic order).
//! - `Lex`: first differing variable decides.
//! - `Block { lex_prefix: k }`: lex on the first k variables, grevlex on
//!   the rest. Any monomial touching the first block beats any monomial
//!   that does not, which is exactly what elimination needs.

use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn deg(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, defined when `self.divides(other)`.
    pub fn div_into(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block { lex_prefix: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::Block { lex_prefix } => {
                let k = *lex_prefix;
                lex(&a.exps()[..k], &b.exps()[..k])
                    .then_with(|| grevlex(&a.exps()[k..], &b.exps()[k..]))
            }
        }
    }

    /// Does the order make the first `drop_count` variables an elimination
    /// block: every monomial touching them beats every monomial that
    /// avoids them?
    pub fn eliminates(&self, drop_count: usize) -> bool {
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::GrevLex => drop_count == 0,
            MonomialOrder::Block { lex_prefix } => drop_count <= *lex_prefix,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".to_string(),
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::Block { lex_prefix } => format!("block({lex_prefix})"),
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing slot means larger
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}
