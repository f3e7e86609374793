//! Groebner bases for submodules of free modules.
//!
//! Everything here works uniformly over Q and Q(u): the coefficient type
//! decides. The central objects are [`ModuleOrder`], a term order on a
//! free module R^s, and [`ReducedGB`], the unique reduced Groebner basis
//! of a submodule. Reduced bases are canonical, so submodule equality is
//! structural equality of their bases; all verification in the crate
//! bottoms out in that comparison.
//!
//! Certificate discipline: `buchberger` and `normal_form` record, into the
//! caller's [`Certificate`], the denominators of every input coefficient
//! and the numerator and denominator of every leading coefficient they
//! invert. Those factors make the whole computation transcript specialize:
//! at any substitution point where none of them vanish, running the same
//! algorithm over Q on the specialized input performs the same steps, so
//! specializing the answer equals recomputing it. Over Q the recording is
//! a no-op.
//!
//! Only Buchberger's first criterion needs care: the coprimality (product)
//! criterion is sound for ideals but not for submodules of R^s with s > 1,
//! so it is applied only at rank one. The chain criterion is sound in
//! general.

pub mod ideal;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::poly::{same_ring, Coefficient, Monomial, MonomialOrder, Poly, PolyMatrix, Ring, VecPoly};

pub use ideal::{
    dim_ideal, elim_ideal, gb_of_polys, height_ideal, ideal_intersect, ideal_product,
    ideal_quotient, ideal_quotient_poly, ideal_sum,
};

/// How module terms (component, monomial) compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentRule {
    /// Compare components first, then monomials. With the natural priority
    /// this is an elimination order on components: anything supported in a
    /// lower-indexed component beats anything in a higher-indexed one,
    /// which is exactly what the syzygy extraction needs.
    PositionOverTerm,
    /// Compare monomials first, components only to break ties.
    TermOverPosition,
}

/// A term order on the free module R^s.
///
/// `priority[c]` is the rank of component c: smaller rank compares
/// greater. The identity priority makes e_0 the biggest component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    base: MonomialOrder,
    rule: ComponentRule,
    priority: Vec<usize>,
}

impl ModuleOrder {
    pub fn pot(base: MonomialOrder, rank: usize) -> Self {
        ModuleOrder {
            base,
            rule: ComponentRule::PositionOverTerm,
            priority: (0..rank).collect(),
        }
    }

    pub fn top(base: MonomialOrder, rank: usize) -> Self {
        ModuleOrder {
            base,
            rule: ComponentRule::TermOverPosition,
            priority: (0..rank).collect(),
        }
    }

    pub fn with_priority(base: MonomialOrder, rule: ComponentRule, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            assert!(p < priority.len() && !seen[p], "priority is not a permutation");
            seen[p] = true;
        }
        ModuleOrder {
            base,
            rule,
            priority,
        }
    }

    pub fn rank(&self) -> usize {
        self.priority.len()
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    pub fn rule(&self) -> ComponentRule {
        self.rule
    }

    pub fn cmp_terms(&self, ac: usize, am: &Monomial, bc: usize, bm: &Monomial) -> Ordering {
        match self.rule {
            ComponentRule::PositionOverTerm => self
                .priority[bc]
                .cmp(&self.priority[ac])
                .then_with(|| self.base.cmp(am, bm)),
            ComponentRule::TermOverPosition => self
                .base
                .cmp(am, bm)
                .then_with(|| self.priority[bc].cmp(&self.priority[ac])),
        }
    }

}

impl fmt::Display for ModuleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            ComponentRule::PositionOverTerm => "pot",
            ComponentRule::TermOverPosition => "top",
        };
        write!(f, "{}/{} on rank {}", self.base.describe(), rule, self.rank())
    }
}

/// Leading term of a module element: (component, monomial, coefficient).
pub fn lead_term<'a, C: Coefficient>(
    v: &'a VecPoly<C>,
    ord: &ModuleOrder,
) -> Option<(usize, &'a Monomial, &'a C)> {
    let mut best: Option<(usize, &Monomial, &C)> = None;
    for c in 0..v.len() {
        if let Some((m, co)) = v.entry(c).lead() {
            best = match best {
                Some((bc, bm, _)) if ord.cmp_terms(c, m, bc, bm) != Ordering::Greater => best,
                _ => Some((c, m, co)),
            };
        }
    }
    best
}

fn term_vec<C: Coefficient>(
    ring: &Ring,
    len: usize,
    comp: usize,
    m: &Monomial,
    c: &C,
) -> VecPoly<C> {
    let mut v = VecPoly::zero(ring, len);
    v.set(comp, Poly::monomial(ring, m.clone(), c.clone()));
    v
}

fn note_vec<C: Coefficient>(v: &VecPoly<C>, cert: &mut Certificate) {
    for e in v.entries() {
        for (_, c) in e.terms() {
            c.note_use(cert);
        }
    }
}

/// Full division remainder against a list of monic elements with cached
/// lead terms. Divides only by leading coefficients equal to one, so it
/// never inverts anything.
fn nf_raw<C: Coefficient>(
    v: &VecPoly<C>,
    gens: &[VecPoly<C>],
    leads: &[(usize, Monomial)],
    ord: &ModuleOrder,
) -> VecPoly<C> {
    let ring = v.ring().clone();
    let len = v.len();
    let mut rem = VecPoly::zero(&ring, len);
    let mut work = v.clone();
    'outer: while let Some((c, m, co)) = lead_term(&work, ord) {
        let (c, m, co) = (c, m.clone(), co.clone());
        for (g, (gc, gm)) in gens.iter().zip(leads) {
            if *gc == c && gm.divides(&m) {
                let delta = gm.div_into(&m).unwrap();
                work = work.sub(&g.mul_term(&delta, &co));
                continue 'outer;
            }
        }
        let t = term_vec(&ring, len, c, &m, &co);
        rem = rem.add(&t);
        work = work.sub(&t);
    }
    rem
}

/// The unique reduced Groebner basis of a submodule of R^s.
///
/// Invariants: every generator is monic; no generator's leading term
/// divides a term of another generator; generators are sorted strictly
/// descending by leading term. Two submodules are equal exactly when
/// their reduced bases are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGB<C: Coefficient> {
    ring: Ring,
    rank: usize,
    order: ModuleOrder,
    gens: Vec<VecPoly<C>>,
}

impl<C: Coefficient> ReducedGB<C> {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn gens(&self) -> &[VecPoly<C>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// For rank-one bases: the generators as plain polynomials.
    pub fn polys(&self) -> Vec<Poly<C>> {
        assert_eq!(self.rank, 1, "polys() is for ideal bases");
        self.gens.iter().map(|g| g.entry(0).clone()).collect()
    }

    /// Rank-one bases only: does the basis generate the unit ideal?
    pub fn is_unit_ideal(&self) -> bool {
        assert_eq!(self.rank, 1, "is_unit_ideal() is for ideal bases");
        self.gens.first().map_or(false, |g| g.entry(0).is_one())
    }

    pub fn contains(&self, v: &VecPoly<C>, cert: &mut Certificate) -> bool {
        normal_form(v, self, cert).is_zero()
    }

    pub fn leads(&self) -> Vec<(usize, Monomial)> {
        self.gens
            .iter()
            .map(|g| {
                let (c, m, _) = lead_term(g, &self.order).expect("GB elements are nonzero");
                (c, m.clone())
            })
            .collect()
    }

    /// One generator per line, in the stored (descending) order.
    pub fn render_lines(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render()).collect()
    }
}

impl<C: Coefficient> fmt::Display for ReducedGB<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Buchberger's algorithm, returning the reduced Groebner basis.
///
/// `rank` fixes the ambient free module R^rank (needed when `gens` is
/// empty). Inversions of leading coefficients and denominators of input
/// coefficients are recorded in `cert`.
pub fn buchberger<C: Coefficient>(
    ring: &Ring,
    rank: usize,
    gens: &[VecPoly<C>],
    order: ModuleOrder,
    cert: &mut Certificate,
) -> ReducedGB<C> {
    assert_eq!(order.rank(), rank, "module order rank mismatch");
    for g in gens {
        assert_eq!(g.len(), rank, "generator length mismatch");
        assert!(same_ring(g.ring(), ring), "generator in foreign ring");
        note_vec(g, cert);
    }

    let mut basis: Vec<VecPoly<C>> = Vec::new();
    let mut leads: Vec<(usize, Monomial)> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pair_set: HashSet<(usize, usize)> = HashSet::new();

    let push_element = |basis: &mut Vec<VecPoly<C>>,
                            leads: &mut Vec<(usize, Monomial)>,
                            pairs: &mut Vec<(usize, usize)>,
                            pair_set: &mut HashSet<(usize, usize)>,
                            r: VecPoly<C>,
                            cert: &mut Certificate| {
        let (c, m, co) = lead_term(&r, &order).expect("nonzero element");
        let (c, m, co) = (c, m.clone(), co.clone());
        co.note_inverted(cert);
        let monic = r.scale(&co.inv());
        let new_idx = basis.len();
        for (i, (lc, _)) in leads.iter().enumerate() {
            if *lc == c {
                pairs.push((i, new_idx));
                pair_set.insert((i, new_idx));
            }
        }
        basis.push(monic);
        leads.push((c, m));
    };

    for g in gens {
        let r = nf_raw(g, &basis, &leads, &order);
        if !r.is_zero() {
            push_element(&mut basis, &mut leads, &mut pairs, &mut pair_set, r, cert);
        }
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm first
        let mut best = 0;
        let mut best_key: Option<(usize, Monomial)> = None;
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            let comp = leads[i].0;
            let l = leads[i].1.lcm(&leads[j].1);
            let better = match &best_key {
                None => true,
                Some((bc, bm)) => order.cmp_terms(comp, &l, *bc, bm) == Ordering::Less,
            };
            if better {
                best = idx;
                best_key = Some((comp, l));
            }
        }
        let (i, j) = pairs.swap_remove(best);
        pair_set.remove(&(i, j));

        let comp = leads[i].0;
        let (mi, mj) = (&leads[i].1, &leads[j].1);
        let l = mi.lcm(mj);

        // product criterion, sound for ideals only
        if rank == 1 && mi.coprime(mj) {
            continue;
        }
        // chain criterion: some k with LT_k | lcm and both mixed pairs done
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].0 == comp
                && leads[k].1.divides(&l)
                && !pair_set.contains(&key(i, k))
                && !pair_set.contains(&key(k, j))
        });
        if chained {
            continue;
        }

        let s = basis[i]
            .mul_term(&mi.div_into(&l).unwrap(), &C::one(ring.nparams()))
            .sub(&basis[j].mul_term(&mj.div_into(&l).unwrap(), &C::one(ring.nparams())));
        let r = nf_raw(&s, &basis, &leads, &order);
        if !r.is_zero() {
            push_element(&mut basis, &mut leads, &mut pairs, &mut pair_set, r, cert);
        }
    }

    // minimalize: drop generators whose lead another lead divides
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && leads[j].0 == leads[i].0
                    && leads[j].1.divides(&leads[i].1)
                    && (leads[j].1 != leads[i].1 || j < i)
            })
        })
        .collect();
    let mut minimal: Vec<VecPoly<C>> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(g, &k)| k.then_some(g))
        .collect();
    let min_leads: Vec<(usize, Monomial)> = leads
        .into_iter()
        .zip(&keep)
        .filter_map(|(l, &k)| k.then_some(l))
        .collect();

    // interreduce to the canonical reduced basis; reducers are monic so no
    // inversions happen here
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let mut others = minimal.clone();
            others.remove(i);
            let mut other_leads = min_leads.clone();
            other_leads.remove(i);
            let r = nf_raw(&minimal[i], &others, &other_leads, &order);
            if r != minimal[i] {
                debug_assert!(!r.is_zero(), "minimal generator reduced to zero");
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut indexed: Vec<(usize, VecPoly<C>)> = minimal.into_iter().enumerate().collect();
    indexed.sort_by(|(i, _), (j, _)| {
        let (ic, im) = &min_leads[*i];
        let (jc, jm) = &min_leads[*j];
        order.cmp_terms(*jc, jm, *ic, im)
    });

    ReducedGB {
        ring: ring.clone(),
        rank,
        order,
        gens: indexed.into_iter().map(|(_, g)| g).collect(),
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Unique remainder of `v` modulo the reduced basis: no term of the result
/// is divisible by any basis leading term, and v - result lies in the
/// submodule.
pub fn normal_form<C: Coefficient>(
    v: &VecPoly<C>,
    gb: &ReducedGB<C>,
    cert: &mut Certificate,
) -> VecPoly<C> {
    assert_eq!(v.len(), gb.rank, "normal form rank mismatch");
    assert!(same_ring(v.ring(), &gb.ring), "normal form ring mismatch");
    note_vec(v, cert);
    let leads = gb.leads();
    nf_raw(v, &gb.gens, &leads, &gb.order)
}

/// Kernel of A : R^cols -> R^rows as a matrix whose columns generate it.
///
/// The columns form the reduced Groebner basis of the syzygy module of
/// A's columns under the position-over-term order induced on R^cols, so
/// the result is canonical. A * result = 0 exactly.
pub fn syzygies<C: Coefficient>(a: &PolyMatrix<C>, cert: &mut Certificate) -> PolyMatrix<C> {
    let ring = a.ring().clone();
    let (s, k) = (a.rows(), a.cols());
    let order = ModuleOrder::pot(ring.order(), s + k);
    let augmented: Vec<VecPoly<C>> = (0..k)
        .map(|j| a.col(j).concat(&VecPoly::unit(&ring, k, j)))
        .collect();
    let gb = buchberger(&ring, s + k, &augmented, order, cert);
    let cols: Vec<VecPoly<C>> = gb
        .gens()
        .iter()
        .filter(|g| (0..s).all(|i| g.entry(i).is_zero()))
        .map(|g| g.slice(s..s + k))
        .collect();
    let result = PolyMatrix::from_cols(&ring, k, &cols);
    debug_assert!(a.mul(&result).is_zero(), "syzygy columns must be kernel elements");
    result
}

/// The syzygies of a list of module elements: kernel of the map R^k ->
/// R^s sending e_j to gens[j]. Returns the reduced basis of that kernel
/// as vectors of length k = gens.len().
pub fn syzygies_of<C: Coefficient>(
    ring: &Ring,
    rank: usize,
    gens: &[VecPoly<C>],
    cert: &mut Certificate,
) -> Vec<VecPoly<C>> {
    let a = PolyMatrix::from_cols(ring, rank, gens);
    let s = syzygies(&a, cert);
    s.cols_as_vecs()
}

/// Write `v` as a combination of `gens` (coefficients in R), or None when
/// v is not in the submodule they generate. `aug` must be the augmented
/// basis of {(gens[j]; e_j)} under a position-over-term order that puts
/// the ambient block first.
fn express_in<C: Coefficient>(
    ring: &Ring,
    v: &VecPoly<C>,
    gens: &[VecPoly<C>],
    aug: &ReducedGB<C>,
    cert: &mut Certificate,
) -> Option<VecPoly<C>> {
    let rank = v.len();
    let k = gens.len();
    let padded = v.concat(&VecPoly::zero(ring, k));
    let red = normal_form(&padded, aug, cert);
    if !(0..rank).all(|i| red.entry(i).is_zero()) {
        return None;
    }
    // (v; 0) reduces to (0; -q), so v = sum q_j gens[j]
    Some(red.slice(rank..rank + k).neg())
}

/// Membership with an explicit witness: expresses `v` in the given
/// generators when possible.
pub fn express<C: Coefficient>(
    ring: &Ring,
    rank: usize,
    v: &VecPoly<C>,
    gens: &[VecPoly<C>],
    cert: &mut Certificate,
) -> Option<VecPoly<C>> {
    MembershipTable::new(ring, rank, gens, cert).express(v, cert)
}

/// Precomputed oracle answering "is v in the submodule, and how" for a
/// fixed generating set. Amortizes the augmented basis across repeated
/// queries (map lifting asks once per column).
pub struct MembershipTable<C: Coefficient> {
    ring: Ring,
    gens: Vec<VecPoly<C>>,
    aug: ReducedGB<C>,
}

impl<C: Coefficient> MembershipTable<C> {
    pub fn new(ring: &Ring, rank: usize, gens: &[VecPoly<C>], cert: &mut Certificate) -> Self {
        let k = gens.len();
        let aug_order = ModuleOrder::pot(ring.order(), rank + k);
        let augmented: Vec<VecPoly<C>> = gens
            .iter()
            .enumerate()
            .map(|(j, g)| g.concat(&VecPoly::unit(ring, k, j)))
            .collect();
        let aug = buchberger(ring, rank + k, &augmented, aug_order, cert);
        MembershipTable { ring: ring.clone(), gens: gens.to_vec(), aug }
    }

    /// Coefficient vector q with v = sum q_j gens[j], or None.
    pub fn express(&self, v: &VecPoly<C>, cert: &mut Certificate) -> Option<VecPoly<C>> {
        express_in(&self.ring, v, &self.gens, &self.aug, cert)
    }

    pub fn contains(&self, v: &VecPoly<C>, cert: &mut Certificate) -> bool {
        self.express(v, cert).is_some()
    }
}

/// Error type shorthand used by the order-checked entry points.
pub fn ensure_elimination(order: MonomialOrder, drop: usize) -> Result<()> {
    if order.eliminates(drop) {
        Ok(())
    } else {
        Err(Error::OrderMismatch)
    }
}
