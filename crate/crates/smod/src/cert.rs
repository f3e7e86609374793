//! Bad-set certificates for specialization.
//!
//! A parametric computation over Q(u)[x] is replayable at u -> alpha as
//! long as alpha avoids the zero sets of finitely many polynomials in u:
//! every denominator that appeared, every leading coefficient that was
//! inverted while making basis elements monic, and every elimination pivot.
//! A `Certificate` accumulates those factors. If all factors are nonzero
//! at alpha, the specialized computation reproduces the parametric one
//! step for step; that is the whole soundness story of this crate.
//!
//! Factors are stored primitive with positive lex-leading coefficient and
//! deduplicated, so certificates are canonical and reports are stable.

use std::collections::BTreeSet;
use std::fmt;

use num::Zero;

use crate::scalar::{factor_cmp, ParamPoly, SubstPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    nparams: usize,
    factors: BTreeSet<ParamPoly>,
}

impl Certificate {
    pub fn new(nparams: usize) -> Self {
        Certificate {
            nparams,
            factors: BTreeSet::new(),
        }
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    /// Record a polynomial whose non-vanishing the computation relied on.
    /// Constants carry no constraint and are dropped; the zero polynomial
    /// is a caller bug (nothing may rely on 0 != 0).
    pub fn register(&mut self, p: &ParamPoly) {
        assert!(!p.is_zero(), "registered a zero certificate factor");
        if p.is_constant() {
            return;
        }
        debug_assert_eq!(p.nparams(), self.nparams);
        self.factors.insert(p.primitive_part());
    }

    /// A point is good when no recorded factor vanishes there.
    pub fn is_good(&self, alpha: &SubstPoint) -> bool {
        self.factors.iter().all(|f| !f.eval(alpha).is_zero())
    }

    pub fn merge(&mut self, other: &Certificate) {
        debug_assert_eq!(self.nparams, other.nparams);
        for f in &other.factors {
            self.factors.insert(f.clone());
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = &ParamPoly> {
        self.factors.iter()
    }

    /// Factors rendered with the given parameter names, sorted by degree
    /// then term data: the canonical report form.
    pub fn factor_strings(&self, names: &[String]) -> Vec<String> {
        let mut fs: Vec<&ParamPoly> = self.factors.iter().collect();
        fs.sort_by(|a, b| factor_cmp(a, b));
        fs.iter().map(|f| f.to_string_with(names)).collect()
    }

    /// True when some recorded factor vanishes identically on the given
    /// value, used by tests to pin down expected bad sets.
    pub fn mentions(&self, p: &ParamPoly) -> bool {
        self.factors.contains(&p.primitive_part())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nparams).map(|i| format!("u{i}")).collect();
        write!(f, "{{{}}}", self.factor_strings(&names).join(", "))
    }
}
