//! Ideal operations built on Groebner bases.
//!
//! Ideals are rank-one submodules; the functions here wrap plain
//! polynomial lists and return canonical [`ReducedGB`]s. Intersections use
//! the t-trick (one auxiliary elimination variable and a block order),
//! quotients divide the intersection with a principal ideal, and
//! dimension comes from maximal independent variable sets of the
//! leading-term ideal. Height is n - dim, which is all the depth theory a
//! polynomial ring needs (it is Cohen-Macaulay).

use super::{buchberger, ensure_elimination, ModuleOrder, ReducedGB};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::poly::{Coefficient, MonomialOrder, Poly, Ring, VecPoly};

/// Reduced Groebner basis of the ideal generated by `polys`, under the
/// ring's own order.
pub fn gb_of_polys<C: Coefficient>(
    ring: &Ring,
    polys: &[Poly<C>],
    cert: &mut Certificate,
) -> ReducedGB<C> {
    let gens: Vec<VecPoly<C>> = polys
        .iter()
        .map(|p| VecPoly::from_entries(ring, vec![p.clone()]))
        .collect();
    buchberger(ring, 1, &gens, ModuleOrder::pot(ring.order(), 1), cert)
}

/// GB of I intersected with the subring omitting the first `drop`
/// variables. Requires the basis to be computed under an order that
/// eliminates that prefix (lex, or a block order with a prefix at least
/// that long).
pub fn elim_ideal<C: Coefficient>(gb: &ReducedGB<C>, drop: usize) -> Result<ReducedGB<C>> {
    assert_eq!(gb.rank(), 1, "elimination works on ideal bases");
    if drop == 0 {
        return Ok(gb.clone());
    }
    let base = gb.order().base();
    ensure_elimination(base, drop)?;
    let restricted = match base {
        MonomialOrder::Lex => MonomialOrder::Lex,
        MonomialOrder::Block { lex_prefix } if lex_prefix > drop => MonomialOrder::Block {
            lex_prefix: lex_prefix - drop,
        },
        _ => MonomialOrder::GrevLex,
    };
    let target = gb.ring().without_prefix(drop, restricted)?;
    let mut gens: Vec<VecPoly<C>> = Vec::new();
    for g in gb.gens() {
        if let Some(p) = g.entry(0).prefix_drop(&target, drop) {
            gens.push(VecPoly::from_entries(&target, vec![p]));
        }
    }
    // the surviving generators of a reduced basis are themselves reduced,
    // and the restriction of an elimination order keeps their sorting
    Ok(ReducedGB {
        ring: target,
        rank: 1,
        order: ModuleOrder::pot(restricted, 1),
        gens,
    })
}

/// A variable or parameter name not yet used by the ring.
fn fresh_name(ring: &Ring, base: &str) -> String {
    let taken = |n: &str| {
        ring.vars().iter().any(|v| v == n) || ring.params().iter().any(|p| p == n)
    };
    if !taken(base) {
        return base.to_string();
    }
    (0..)
        .map(|i| format!("{base}{i}"))
        .find(|cand| !taken(cand))
        .unwrap()
}

/// I ∩ J by the t-trick: eliminate t from t·I + (1−t)·J.
pub fn ideal_intersect<C: Coefficient>(
    ring: &Ring,
    a: &[Poly<C>],
    b: &[Poly<C>],
    cert: &mut Certificate,
) -> ReducedGB<C> {
    let nontrivial = |ps: &[Poly<C>]| ps.iter().any(|p| !p.is_zero());
    if !nontrivial(a) || !nontrivial(b) {
        return buchberger(ring, 1, &[], ModuleOrder::pot(ring.order(), 1), cert);
    }
    let t_name = fresh_name(ring, "t");
    let ext = ring
        .with_elim_prefix(&t_name)
        .expect("fresh elimination variable");
    let t = Poly::<C>::var(&ext, 0);
    let one_minus_t = Poly::one(&ext).sub(&t);
    let mut gens: Vec<VecPoly<C>> = Vec::new();
    for p in a {
        gens.push(VecPoly::from_entries(
            &ext,
            vec![p.prefix_extend(&ext).mul(&t)],
        ));
    }
    for p in b {
        gens.push(VecPoly::from_entries(
            &ext,
            vec![p.prefix_extend(&ext).mul(&one_minus_t)],
        ));
    }
    let gb_ext = buchberger(&ext, 1, &gens, ModuleOrder::pot(ext.order(), 1), cert);
    let eliminated = elim_ideal(&gb_ext, 1).expect("block order eliminates its prefix");
    // rebase into the caller's ring and order
    let rebased: Vec<Poly<C>> = eliminated
        .polys()
        .into_iter()
        .map(|p| p.with_ring(ring).expect("same variables"))
        .collect();
    gb_of_polys(ring, &rebased, cert)
}

/// (I : f) = (I ∩ (f)) · f⁻¹. For f = 0 the quotient is the whole ring.
pub fn ideal_quotient_poly<C: Coefficient>(
    ring: &Ring,
    i: &[Poly<C>],
    f: &Poly<C>,
    cert: &mut Certificate,
) -> ReducedGB<C> {
    if f.is_zero() {
        return gb_of_polys(ring, &[Poly::one(ring)], cert);
    }
    let inter = ideal_intersect(ring, i, &[f.clone()], cert);
    let divided: Vec<Poly<C>> = inter
        .polys()
        .into_iter()
        .map(|p| {
            p.div_exact(f)
                .expect("members of I ∩ (f) are divisible by f")
        })
        .collect();
    gb_of_polys(ring, &divided, cert)
}

/// (I : J) = ⋂ over J's generators of (I : g).
pub fn ideal_quotient<C: Coefficient>(
    ring: &Ring,
    i: &[Poly<C>],
    j: &[Poly<C>],
    cert: &mut Certificate,
) -> ReducedGB<C> {
    let mut acc: Option<Vec<Poly<C>>> = None;
    for g in j.iter().filter(|g| !g.is_zero()) {
        let q = ideal_quotient_poly(ring, i, g, cert);
        acc = Some(match acc {
            None => q.polys(),
            Some(prev) => ideal_intersect(ring, &prev, &q.polys(), cert).polys(),
        });
    }
    match acc {
        // J = (0): everything annihilates it
        None => gb_of_polys(ring, &[Poly::one(ring)], cert),
        Some(polys) => gb_of_polys(ring, &polys, cert),
    }
}

pub fn ideal_sum<C: Coefficient>(
    ring: &Ring,
    a: &[Poly<C>],
    b: &[Poly<C>],
    cert: &mut Certificate,
) -> ReducedGB<C> {
    let mut gens = a.to_vec();
    gens.extend_from_slice(b);
    gb_of_polys(ring, &gens, cert)
}

pub fn ideal_product<C: Coefficient>(
    ring: &Ring,
    a: &[Poly<C>],
    b: &[Poly<C>],
    cert: &mut Certificate,
) -> ReducedGB<C> {
    let mut gens = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            let prod = p.mul(q);
            if !prod.is_zero() {
                gens.push(prod);
            }
        }
    }
    gb_of_polys(ring, &gens, cert)
}

/// Krull dimension of R/I from the leading-term ideal: the largest set S
/// of variables such that no leading monomial is supported inside S.
/// Returns n for the zero ideal and -1 for the unit ideal.
pub fn dim_ideal<C: Coefficient>(gb: &ReducedGB<C>) -> i64 {
    assert_eq!(gb.rank(), 1, "dimension works on ideal bases");
    let n = gb.ring().nvars();
    assert!(n <= 20, "independent-set enumeration caps at 20 variables");
    if gb.is_empty() {
        return n as i64;
    }
    let masks: Vec<u32> = gb
        .leads()
        .iter()
        .map(|(_, m)| {
            m.exps()
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
        })
        .collect();
    let mut best: i64 = -1;
    for s in 0u32..(1 << n) {
        if masks.iter().any(|&m| m & !s == 0) {
            continue; // some leading monomial lives inside S
        }
        best = best.max(s.count_ones() as i64);
    }
    best
}

/// Height of a proper nonzero ideal: n - dim(R/I). The polynomial ring is
/// Cohen-Macaulay, so this is also the depth of I on R.
pub fn height_ideal<C: Coefficient>(gb: &ReducedGB<C>) -> Result<i64> {
    assert_eq!(gb.rank(), 1, "height works on ideal bases");
    if gb.is_empty() || gb.is_unit_ideal() {
        return Err(Error::ImproperIdeal);
    }
    Ok(gb.ring().nvars() as i64 - dim_ideal(gb))
}
