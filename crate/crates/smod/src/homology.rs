//! Tor, Ext, grade, projective dimension, and perfection.
//!
//! Everything here reduces to one recipe: resolve the first argument by
//! iterated syzygies, apply tensor or Hom against the second argument
//! levelwise (both send free modules to direct sums of copies of the
//! module, with the resolution matrices acting blockwise), and take
//! homology of the resulting chain of presented-module maps. Grade and
//! projective dimension are then Ext-vanishing scans, which keeps them
//! independent of whether the resolution happened to be minimal.

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::fpmod::{FPModule, ModuleMap};
use crate::poly::{ensure_same_ring, Coefficient, Poly, PolyMatrix};
use crate::resolve::{complex_homology, default_resolution_cap, free_resolution, Depth};

/// M^rank as a presented module: block-diagonal copies of M's
/// presentation.
fn power_module<C: Coefficient>(m: &FPModule<C>, rank: usize) -> FPModule<C> {
    let eye = PolyMatrix::identity(m.ring(), rank);
    FPModule::present(eye.tensor(m.presentation()))
}

/// A free-complex matrix acting blockwise on copies of M: the map
/// M^cols -> M^rows with v0 = phi (x) I on generators and v1 = phi (x) I
/// on relations. The mixed product rule makes the square commute on the
/// nose, so no lifting is needed.
fn blockwise_map<C: Coefficient>(
    phi: &PolyMatrix<C>,
    m: &FPModule<C>,
    source: &FPModule<C>,
    target: &FPModule<C>,
) -> ModuleMap<C> {
    let g = m.gens();
    let pc = m.presentation().cols();
    let ring = m.ring();
    let v0 = phi.tensor(&PolyMatrix::identity(ring, g));
    let v1 = phi.tensor(&PolyMatrix::identity(ring, pc));
    ModuleMap::from_parts(source.clone(), target.clone(), v0, v1)
        .expect("tensoring preserves the compatibility square")
}

/// Tor_0 .. Tor_up_to of (L, M), via H_i(F (x) M) for a free resolution
/// F of L. Ranks beyond the resolution length are zero, so high indices
/// vanish without extra work.
pub fn tor_modules<C: Coefficient>(
    l: &FPModule<C>,
    m: &FPModule<C>,
    up_to: usize,
    cert: &mut Certificate,
) -> Result<Vec<FPModule<C>>> {
    let res = free_resolution(l, default_resolution_cap(l.ring()), cert)?;
    let len = res.length();
    let top = len.max(up_to);
    if top == 0 {
        // free module, degree zero: L (x) M is just copies of M
        return Ok(vec![power_module(m, res.rank_f(0))]);
    }
    let rank_at = |j: usize| if j <= len { res.rank_f(j) } else { 0 };
    let modules: Vec<FPModule<C>> = (0..=top).map(|j| power_module(m, rank_at(j))).collect();
    let maps: Vec<ModuleMap<C>> = (1..=top)
        .map(|j| {
            if j <= len {
                blockwise_map(res.phi(j), m, &modules[j], &modules[j - 1])
            } else {
                ModuleMap::zero_map(&modules[j], &modules[j - 1]).expect("same ring")
            }
        })
        .collect();
    let mut h = complex_homology(&maps, cert)?;
    h.truncate(up_to + 1);
    Ok(h)
}

/// Ext^0 .. Ext^up_to of (L, M), via the cohomology of Hom(F, M) for a
/// free resolution F of L. The Hom complex is the reversed chain with
/// transposed matrices, so H^i is H_{top - i} of that chain.
pub fn ext_modules<C: Coefficient>(
    l: &FPModule<C>,
    m: &FPModule<C>,
    up_to: usize,
    cert: &mut Certificate,
) -> Result<Vec<FPModule<C>>> {
    let res = free_resolution(l, default_resolution_cap(l.ring()), cert)?;
    let len = res.length();
    let top = len.max(up_to);
    if top == 0 {
        return Ok(vec![power_module(m, res.rank_f(0))]);
    }
    let rank_at = |j: usize| if j <= len { res.rank_f(j) } else { 0 };
    // chain position j holds Hom(F_{top - j}, M)
    let modules: Vec<FPModule<C>> = (0..=top)
        .map(|j| power_module(m, rank_at(top - j)))
        .collect();
    let maps: Vec<ModuleMap<C>> = (1..=top)
        .map(|j| {
            let i = top - j + 1; // differential precomposes with phi_i
            if i <= len {
                let phi_t = res.phi(i).transpose();
                blockwise_map(&phi_t, m, &modules[j], &modules[j - 1])
            } else {
                ModuleMap::zero_map(&modules[j], &modules[j - 1]).expect("same ring")
            }
        })
        .collect();
    let h = complex_homology(&maps, cert)?;
    Ok((0..=up_to)
        .map(|i| {
            if i <= top {
                h[top - i].clone()
            } else {
                FPModule::free(l.ring(), 0)
            }
        })
        .collect())
}

pub fn tor<C: Coefficient>(
    l: &FPModule<C>,
    m: &FPModule<C>,
    i: usize,
    cert: &mut Certificate,
) -> Result<FPModule<C>> {
    ensure_same_ring(l.ring(), m.ring())?;
    let mut all = tor_modules(l, m, i, cert)?;
    Ok(all.swap_remove(i))
}

pub fn ext<C: Coefficient>(
    l: &FPModule<C>,
    m: &FPModule<C>,
    i: usize,
    cert: &mut Certificate,
) -> Result<FPModule<C>> {
    ensure_same_ring(l.ring(), m.ring())?;
    let mut all = ext_modules(l, m, i, cert)?;
    Ok(all.swap_remove(i))
}

/// grade(I, L) = min { i : Ext^i(R/I, L) != 0 }, scanned up to the
/// variable count; infinite when everything in range vanishes (in
/// particular when L = IL, e.g. I = (1)).
pub fn grade_on<C: Coefficient>(
    ideal_gens: &[Poly<C>],
    l: &FPModule<C>,
    cert: &mut Certificate,
) -> Result<Depth> {
    let ring = l.ring().clone();
    let quotient = FPModule::cyclic(&ring, ideal_gens);
    let n = ring.nvars();
    let exts = ext_modules(&quotient, l, n, cert)?;
    for (i, e) in exts.iter().enumerate() {
        if !e.is_zero(cert) {
            return Ok(Depth::Finite(i as i64));
        }
    }
    Ok(Depth::Infinite)
}

/// grade L = grade(Ann L, R).
pub fn grade_module<C: Coefficient>(l: &FPModule<C>, cert: &mut Certificate) -> Result<i64> {
    if l.is_zero(cert) {
        return Err(Error::ZeroModule);
    }
    let ann = l.annihilator(cert);
    let free1 = FPModule::free(l.ring(), 1);
    match grade_on(&ann.polys(), &free1, cert)? {
        Depth::Finite(g) => Ok(g),
        Depth::Infinite => unreachable!("a nonzero module has a proper annihilator"),
    }
}

/// proj.dim L = max { i : Ext^i(L, R) != 0 }; 0 for free modules. Valid
/// because the ring has finite global dimension, so the top nonzero Ext
/// against R detects the end of every projective resolution.
pub fn proj_dim<C: Coefficient>(l: &FPModule<C>, cert: &mut Certificate) -> Result<i64> {
    if l.is_zero(cert) {
        return Err(Error::ZeroModule);
    }
    let free1 = FPModule::free(l.ring(), 1);
    let n = l.ring().nvars();
    let exts = ext_modules(l, &free1, n, cert)?;
    let top = exts
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero(cert))
        .map(|(i, _)| i as i64)
        .max();
    Ok(top.expect("a nonzero module has some nonzero Ext against R"))
}

/// Perfection: grade L = proj.dim L.
pub fn is_perfect<C: Coefficient>(l: &FPModule<C>, cert: &mut Certificate) -> Result<bool> {
    let g = grade_module(l, cert)?;
    let p = proj_dim(l, cert)?;
    debug_assert!(g <= p, "grade exceeds projective dimension");
    Ok(g == p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, Ring, RingData};
    use crate::scalar::Rational;

    fn ring2() -> Ring {
        RingData::rational(&["x1", "x2"], MonomialOrder::GrevLex)
    }

    fn pp(r: &Ring, s: &str) -> Poly<Rational> {
        parse_poly(r, s).unwrap()
    }

    fn quot(r: &Ring, rels: &[&str]) -> FPModule<Rational> {
        let ps: Vec<Poly<Rational>> = rels.iter().map(|s| pp(r, s)).collect();
        FPModule::cyclic(r, &ps)
    }

    fn c0() -> Certificate {
        Certificate::new(0)
    }

    #[test]
    fn tor_zero_is_the_tensor_product() {
        let r = ring2();
        let mut cert = c0();
        let l = quot(&r, &["x1"]);
        let m = quot(&r, &["x2"]);
        let t0 = tor(&l, &m, 0, &mut cert).unwrap();
        let both = quot(&r, &["x1", "x2"]);
        assert_eq!(t0.fingerprint(&mut cert), both.fingerprint(&mut cert));
    }

    #[test]
    fn tor_one_distinguishes_regular_from_torsion() {
        let r = ring2();
        let mut cert = c0();
        let l = quot(&r, &["x1"]);
        // x2 is regular on R/(x1): no torsion
        let t1 = tor(&l, &quot(&r, &["x2"]), 1, &mut cert).unwrap();
        assert!(t1.is_zero(&mut cert));
        // against itself the multiplication map is zero: full torsion
        let t1b = tor(&l, &l, 1, &mut cert).unwrap();
        assert_eq!(t1b.fingerprint(&mut cert), l.fingerprint(&mut cert));
    }

    #[test]
    fn tor_is_symmetric_and_vanishes_on_free_arguments() {
        let r = ring2();
        let mut cert = c0();
        let l = quot(&r, &["x1*x2"]);
        let m = quot(&r, &["x1"]);
        for i in 0..=2 {
            let ab = tor(&l, &m, i, &mut cert).unwrap();
            let ba = tor(&m, &l, i, &mut cert).unwrap();
            assert_eq!(ab.fingerprint(&mut cert), ba.fingerprint(&mut cert));
        }
        let free = FPModule::<Rational>::free(&r, 2);
        for i in 1..=2 {
            assert!(tor(&l, &free, i, &mut cert).unwrap().is_zero(&mut cert));
            assert!(tor(&free, &l, i, &mut cert).unwrap().is_zero(&mut cert));
        }
    }

    #[test]
    fn ext_of_standard_examples() {
        let r = ring2();
        let mut cert = c0();
        let free1 = FPModule::<Rational>::free(&r, 1);
        let m = quot(&r, &["x1*x2"]);

        // Hom(R, M) = M
        let e0 = ext(&free1, &m, 0, &mut cert).unwrap();
        assert_eq!(e0.fingerprint(&mut cert), m.fingerprint(&mut cert));

        // dualizing 0 -> R -x1-> R leaves the cokernel in degree one
        let l = quot(&r, &["x1"]);
        let e1 = ext(&l, &free1, 1, &mut cert).unwrap();
        assert_eq!(e1.fingerprint(&mut cert), l.fingerprint(&mut cert));
        assert!(ext(&l, &free1, 0, &mut cert).unwrap().is_zero(&mut cert));

        // projectivity: Ext^i(free, M) = 0 for i >= 1
        for i in 1..=2 {
            assert!(ext(&free1, &m, i, &mut cert).unwrap().is_zero(&mut cert));
        }
    }

    #[test]
    fn grade_scans() {
        let r = ring2();
        let mut cert = c0();
        let free1 = FPModule::<Rational>::free(&r, 1);
        let g2 = grade_on(&[pp(&r, "x1"), pp(&r, "x2")], &free1, &mut cert).unwrap();
        assert_eq!(g2, Depth::Finite(2));
        let g1 = grade_on(&[pp(&r, "x1")], &free1, &mut cert).unwrap();
        assert_eq!(g1, Depth::Finite(1));
        let ginf = grade_on(&[pp(&r, "1")], &free1, &mut cert).unwrap();
        assert_eq!(ginf, Depth::Infinite);
    }

    #[test]
    fn grade_matches_height_on_proper_ideals() {
        use crate::groebner::ideal::{gb_of_polys, height_ideal};
        let r = ring2();
        let mut cert = c0();
        let free1 = FPModule::<Rational>::free(&r, 1);
        for gens in [vec!["x1"], vec!["x1", "x2"], vec!["x1*x2"]] {
            let ps: Vec<Poly<Rational>> = gens.iter().map(|s| pp(&r, s)).collect();
            let gb = gb_of_polys(&r, &ps, &mut cert);
            let h = height_ideal(&gb).unwrap();
            assert_eq!(
                grade_on(&ps, &free1, &mut cert).unwrap(),
                Depth::Finite(h)
            );
        }
    }

    #[test]
    fn grade_of_modules() {
        let r = ring2();
        let mut cert = c0();
        assert_eq!(grade_module(&quot(&r, &["x1", "x2"]), &mut cert), Ok(2));
        assert_eq!(grade_module(&quot(&r, &["x1"]), &mut cert), Ok(1));
        assert_eq!(
            grade_module(&FPModule::<Rational>::free(&r, 1), &mut cert),
            Ok(0)
        );
        assert_eq!(
            grade_module(&quot(&r, &["1"]), &mut cert),
            Err(Error::ZeroModule)
        );
    }

    #[test]
    fn projective_dimension_ladder() {
        let r = ring2();
        let mut cert = c0();
        assert_eq!(
            proj_dim(&FPModule::<Rational>::free(&r, 2), &mut cert),
            Ok(0)
        );
        assert_eq!(proj_dim(&quot(&r, &["x1"]), &mut cert), Ok(1));
        assert_eq!(proj_dim(&quot(&r, &["x1", "x2"]), &mut cert), Ok(2));
        assert_eq!(
            proj_dim(&quot(&r, &["1"]), &mut cert),
            Err(Error::ZeroModule)
        );
    }

    #[test]
    fn perfection() {
        let r = ring2();
        let mut cert = c0();
        assert_eq!(is_perfect(&quot(&r, &["x1", "x2"]), &mut cert), Ok(true));
        assert_eq!(
            is_perfect(&FPModule::<Rational>::free(&r, 1), &mut cert),
            Ok(true)
        );
        let mixed = quot(&r, &["x1"])
            .direct_sum(&FPModule::free(&r, 1))
            .unwrap();
        assert_eq!(grade_module(&mixed, &mut cert), Ok(0));
        assert_eq!(proj_dim(&mixed, &mut cert), Ok(1));
        assert_eq!(is_perfect(&mixed, &mut cert), Ok(false));
    }

    #[test]
    fn indices_beyond_the_resolution_vanish() {
        let r = ring2();
        let mut cert = c0();
        let l = quot(&r, &["x1"]);
        let m = quot(&r, &["x1"]);
        assert!(tor(&l, &m, 2, &mut cert).unwrap().is_zero(&mut cert));
        assert!(ext(&l, &m, 2, &mut cert).unwrap().is_zero(&mut cert));
    }

    #[test]
    fn grade_never_exceeds_projective_dimension() {
        let r = ring2();
        let mut cert = c0();
        let candidates = [
            quot(&r, &["x1"]),
            quot(&r, &["x1", "x2"]),
            quot(&r, &["x1*x2"]),
            quot(&r, &["x1^2", "x1*x2"]),
            quot(&r, &["x1"]).direct_sum(&FPModule::free(&r, 1)).unwrap(),
        ];
        for l in &candidates {
            let g = grade_module(l, &mut cert).unwrap();
            let p = proj_dim(l, &mut cert).unwrap();
            assert!(g <= p, "grade {g} > proj dim {p}");
        }
    }
}
