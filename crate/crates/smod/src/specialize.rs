//! The substitution u -> alpha at every level: scalars, polynomials,
//! matrices, ideals, modules, maps, and complexes.
//!
//! Substitution is sound only away from the recorded certificate
//! factors. Every function here registers the denominators it touches,
//! so a point that passes `Certificate::is_good` after the parametric
//! computation makes the whole transcript specialize cleanly. The
//! structural re-checks (compatibility squares, composite-zero) are
//! still performed after substitution and raise their own errors, so a
//! bad point that escaped the certificate is reported rather than
//! silently absorbed.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::fpmod::{FPModule, ModuleMap, Submodule};
use crate::groebner::ideal::gb_of_polys;
use crate::groebner::ReducedGB;
use crate::poly::{Coefficient, Poly, PolyMatrix, Ring, VecPoly};
use crate::resolve::FreeComplex;
use crate::scalar::{RatFun, Rational, SubstPoint};

/// Number of draws before sampling gives up.
const SAMPLE_LIMIT: usize = 1000;

/// Fail with the first certificate factor that vanishes at alpha.
pub fn require_good(cert: &Certificate, alpha: &SubstPoint, ring: &Ring) -> Result<()> {
    for f in cert.factors() {
        if num::Zero::is_zero(&f.eval(alpha)) {
            return Err(Error::BadSubstitution {
                factor: f.to_string_with(ring.params()),
                context: format!("certificate factor vanishes at {alpha}"),
            });
        }
    }
    Ok(())
}

/// Substitute parameters in a polynomial, coefficient by coefficient.
/// Denominators encountered are registered into the certificate; a
/// vanishing one raises BadSubstitution.
pub fn subst_poly(
    p: &Poly<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<Poly<Rational>> {
    let target = p.ring().specialized();
    let names = p.ring().params();
    let mut terms = Vec::with_capacity(p.nterms());
    for (m, c) in p.terms() {
        c.note_use(cert);
        let value = c.eval(alpha, names)?;
        terms.push((m.clone(), value));
    }
    Ok(Poly::from_terms(&target, terms))
}

pub fn subst_vec(
    v: &VecPoly<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<VecPoly<Rational>> {
    let target = v.ring().specialized();
    let entries: Result<Vec<Poly<Rational>>> =
        v.entries().iter().map(|p| subst_poly(p, alpha, cert)).collect();
    Ok(VecPoly::from_entries(&target, entries?))
}

pub fn subst_matrix(
    a: &PolyMatrix<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<PolyMatrix<Rational>> {
    let target = a.ring().specialized();
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for j in 0..a.cols() {
            row.push(subst_poly(a.entry(i, j), alpha, cert)?);
        }
        rows.push(row);
    }
    Ok(PolyMatrix::from_rows(&target, rows))
}

/// Specialize a reduced basis elementwise. At a certified point the
/// result is again the reduced basis of the specialized submodule
/// (leading terms are monic, so they survive substitution); compare it
/// against an independently recomputed basis to verify that claim.
pub fn specialize_gb(
    gb: &ReducedGB<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<Vec<VecPoly<Rational>>> {
    gb.gens().iter().map(|g| subst_vec(g, alpha, cert)).collect()
}

/// The ideal I_alpha: substitute the generators and recompute a reduced
/// basis over the specialized ring. The parametric basis of I is run
/// first purely to charge its inversions to the certificate, so a
/// certified point is good for both routes of a comparison.
pub fn specialize_ideal(
    gens: &[Poly<RatFun>],
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<ReducedGB<Rational>> {
    if let Some(first) = gens.first() {
        let _parametric = gb_of_polys(first.ring(), gens, cert);
    }
    let target_gens: Result<Vec<Poly<Rational>>> =
        gens.iter().map(|p| subst_poly(p, alpha, cert)).collect();
    let target_gens = target_gens?;
    let ring = match target_gens.first() {
        Some(p) => p.ring().clone(),
        None => return Err(Error::input("specialize_ideal needs at least one generator")),
    };
    Ok(gb_of_polys(&ring, &target_gens, cert))
}

pub fn specialize_module(
    l: &FPModule<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<FPModule<Rational>> {
    Ok(FPModule::present(subst_matrix(l.presentation(), alpha, cert)?))
}

pub fn specialize_submodule(
    m: &Submodule<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<Submodule<Rational>> {
    let ambient = specialize_module(m.ambient(), alpha, cert)?;
    let gens: Result<Vec<VecPoly<Rational>>> = m
        .generators()
        .iter()
        .map(|g| subst_vec(g, alpha, cert))
        .collect();
    Ok(Submodule::new(ambient, gens?))
}

/// v_alpha with the compatibility square re-verified; a vanishing
/// square means alpha escaped the certificate and must be reported.
pub fn specialize_map(
    v: &ModuleMap<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<ModuleMap<Rational>> {
    let source = specialize_module(v.source(), alpha, cert)?;
    let target = specialize_module(v.target(), alpha, cert)?;
    let v0 = subst_matrix(v.v0(), alpha, cert)?;
    let v1 = subst_matrix(v.v1(), alpha, cert)?;
    ModuleMap::from_parts(source, target, v0, v1)
}

/// C_alpha with the composite-zero property re-verified.
pub fn specialize_complex(
    c: &FreeComplex<RatFun>,
    alpha: &SubstPoint,
    cert: &mut Certificate,
) -> Result<FreeComplex<Rational>> {
    let target = c.ring().specialized();
    let maps: Result<Vec<PolyMatrix<Rational>>> =
        c.maps().iter().map(|m| subst_matrix(m, alpha, cert)).collect();
    FreeComplex::new(&target, c.ranks().to_vec(), maps?)
}

/// Draw integer points in [-bound, bound]^m until one clears the
/// certificate. Deterministic in the seed; the limit only trips when
/// the certificate factors cover the whole grid.
pub fn sample_alpha(seed: u64, cert: &Certificate, bound: i64) -> Result<SubstPoint> {
    assert!(bound >= 1, "sampling bound must be positive");
    let m = cert.nparams();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_LIMIT {
        let coords: Vec<Rational> = (0..m)
            .map(|_| Rational::from_integer(rng.random_range(-bound..=bound).into()))
            .collect();
        let point = SubstPoint::new(coords);
        if cert.is_good(&point) {
            return Ok(point);
        }
    }
    Err(Error::ExhaustedSampling { draws: SAMPLE_LIMIT })
}

/// A parametric object next to its specialization at a certified point.
#[derive(Debug, Clone)]
pub struct SpecializedPair<A, B> {
    pub over_r: A,
    pub over_alpha: B,
    pub alpha: SubstPoint,
}

impl<A, B> SpecializedPair<A, B> {
    /// Pair the two sides after checking the point against the
    /// certificate accumulated so far.
    pub fn certify(
        over_r: A,
        over_alpha: B,
        alpha: SubstPoint,
        cert: &Certificate,
        ring: &Ring,
    ) -> Result<Self> {
        require_good(cert, &alpha, ring)?;
        Ok(SpecializedPair {
            over_r,
            over_alpha,
            alpha,
        })
    }
}
