//! Free complexes, rank, determinantal ideals, resolutions, and the
//! Buchsbaum-Eisenbud exactness test.
//!
//! Rank is computed by fraction-free elimination, so only pivot leading
//! coefficients ever get inverted; each pivot is a minor of the input,
//! and the last one is the witness whose survival under substitution
//! keeps the rank from dropping. The exactness test combines rank
//! additivity with the depth (here: height) of the critical
//! determinantal ideals, which is the full criterion for a finite free
//! complex over a Cohen-Macaulay ring.

use std::fmt;

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::fpmod::{FPModule, ModuleMap, Submodule};
use crate::groebner::ideal::{gb_of_polys, height_ideal};
use crate::groebner::{syzygies, ReducedGB};
use crate::poly::{ensure_same_ring, Coefficient, Poly, PolyMatrix, Ring};

/// A finite complex of free modules F_0 <- F_1 <- ... <- F_l.
///
/// Invariants: maps[i] is phi_{i+1} : F_{i+1} -> F_i, so its shape is
/// ranks[i] x ranks[i+1]; consecutive maps compose to zero. Both are
/// checked at construction, so a value of this type is a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeComplex<C: Coefficient> {
    ring: Ring,
    ranks: Vec<usize>,
    maps: Vec<PolyMatrix<C>>,
}

impl<C: Coefficient> FreeComplex<C> {
    pub fn new(ring: &Ring, ranks: Vec<usize>, maps: Vec<PolyMatrix<C>>) -> Result<Self> {
        assert_eq!(
            ranks.len(),
            maps.len() + 1,
            "a complex with l maps has l + 1 ranks"
        );
        for (i, m) in maps.iter().enumerate() {
            ensure_same_ring(ring, m.ring())?;
            assert_eq!(m.rows(), ranks[i], "map {} has wrong row count", i + 1);
            assert_eq!(m.cols(), ranks[i + 1], "map {} has wrong column count", i + 1);
        }
        for i in 0..maps.len().saturating_sub(1) {
            if !maps[i].mul(&maps[i + 1]).is_zero() {
                return Err(Error::NotAComplex { index: i + 1 });
            }
        }
        Ok(FreeComplex {
            ring: ring.clone(),
            ranks,
            maps,
        })
    }

    /// The complex 0 -> F_0 with no maps.
    pub fn trivial(ring: &Ring, rank: usize) -> Self {
        FreeComplex {
            ring: ring.clone(),
            ranks: vec![rank],
            maps: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of maps (the l in F_0 <- ... <- F_l).
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank_f(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn maps(&self) -> &[PolyMatrix<C>] {
        &self.maps
    }

    /// phi_i : F_i -> F_{i-1}, for 1 <= i <= length.
    pub fn phi(&self, i: usize) -> &PolyMatrix<C> {
        assert!(i >= 1 && i <= self.maps.len(), "phi index out of range");
        &self.maps[i - 1]
    }

    pub fn render_lines(&self) -> Vec<String> {
        let shape: Vec<String> = self.ranks.iter().map(|r| format!("R^{r}")).collect();
        let mut out = vec![format!("complex: {}", shape.join(" <- "))];
        for (i, m) in self.maps.iter().enumerate() {
            out.push(format!("phi_{}:", i + 1));
            for line in m.render_rows() {
                out.push(format!("  {line}"));
            }
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for FreeComplex<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_lines().join("\n"))
    }
}

/// The Koszul complex on a sequence of ring elements. Basis of F_k: the
/// k-element subsets of the sequence indices in lexicographic order.
pub fn koszul_complex<C: Coefficient>(ring: &Ring, fs: &[Poly<C>]) -> FreeComplex<C> {
    let c = fs.len();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=c).map(|k| k_subsets(c, k)).collect();
    let ranks: Vec<usize> = subsets.iter().map(|s| s.len()).collect();
    let mut maps = Vec::with_capacity(c);
    for k in 1..=c {
        let rows = &subsets[k - 1];
        let cols = &subsets[k];
        let m = PolyMatrix::from_fn(ring, rows.len(), cols.len(), |i, j| {
            let t = &rows[i];
            let s = &cols[j];
            // nonzero iff s = t plus one extra index; signs alternate
            // from the tail of s, so phi_1 = [f_1 .. f_c] and the rank
            // two differential is (f_2, -f_1) like the syzygy of a pair
            for (pos, &idx) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(pos);
                if &rest == t {
                    let f = fs[idx].clone();
                    return if (s.len() - 1 - pos) % 2 == 0 {
                        f
                    } else {
                        f.neg()
                    };
                }
            }
            Poly::zero(ring)
        });
        maps.push(m);
    }
    FreeComplex::new(ring, ranks, maps).expect("the Koszul differential squares to zero")
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Largest t with a nonzero t x t minor, by fraction-free elimination.
///
/// Every pivot is (up to sign) a minor of the input, and its leading
/// coefficient is registered as invertible in the certificate; the last
/// pivot is a witness minor of full rank size, so rank cannot drop at a
/// certified substitution point (and cannot grow, because the larger
/// minors vanish identically).
pub fn rank_matrix<C: Coefficient>(a: &PolyMatrix<C>, cert: &mut Certificate) -> usize {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for (_, c) in a.entry(i, j).terms() {
                c.note_use(cert);
            }
        }
    }
    let ring = a.ring().clone();
    let (nr, nc) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Poly<C>>> = (0..nr)
        .map(|i| (0..nc).map(|j| a.entry(i, j).clone()).collect())
        .collect();
    let mut prev = Poly::one(&ring);
    let mut rank = 0;
    for k in 0..nr.min(nc) {
        let pivot = (k..nr)
            .flat_map(|i| (k..nc).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        m[k][k]
            .lead_coeff()
            .expect("pivot is nonzero")
            .note_inverted(cert);
        for i in k + 1..nr {
            for j in k + 1..nc {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
        }
        prev = m[k][k].clone();
        rank += 1;
    }
    debug_assert_eq!(rank, rank_by_minors(a), "elimination disagrees with minors");
    rank
}

/// Oracle for small matrices: scan minor sizes from the top.
fn rank_by_minors<C: Coefficient>(a: &PolyMatrix<C>) -> usize {
    (1..=a.rows().min(a.cols()))
        .rev()
        .find(|&t| a.minors(t).iter().any(|p| !p.is_zero()))
        .unwrap_or(0)
}

/// Reduced GB of I_t(A), the ideal of all t x t minors.
pub fn determinantal_ideal<C: Coefficient>(
    a: &PolyMatrix<C>,
    t: usize,
    cert: &mut Certificate,
) -> ReducedGB<C> {
    assert!(t >= 1, "determinantal ideals start at t = 1");
    gb_of_polys(a.ring(), &a.minors(t), cert)
}

/// (rank A, I(A)): the critical determinantal ideal taken at t = rank.
/// I(A) = (1) for the zero map, matching the depth convention.
pub fn rank_and_ideal<C: Coefficient>(
    a: &PolyMatrix<C>,
    cert: &mut Certificate,
) -> (usize, ReducedGB<C>) {
    let d = rank_matrix(a, cert);
    let gb = gb_of_polys(a.ring(), &a.minors(d), cert);
    (d, gb)
}

/// Depth of an ideal on the ring, with the unit ideal at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Depth {
    Finite(i64),
    Infinite,
}

impl Depth {
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Depth::Finite(d) => *d >= bound,
            Depth::Infinite => true,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{d}"),
            Depth::Infinite => write!(f, "inf"),
        }
    }
}

/// Depth of a determinantal ideal on R. The polynomial ring is
/// Cohen-Macaulay, so depth = height; (1) has infinite depth by
/// convention and (0) cannot occur for I(A) at t = rank.
fn ideal_depth<C: Coefficient>(gb: &ReducedGB<C>) -> Depth {
    if gb.is_unit_ideal() {
        return Depth::Infinite;
    }
    Depth::Finite(height_ideal(gb).expect("critical ideal is nonzero"))
}

/// One row of the exactness report, covering position i >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessStep {
    pub index: usize,
    pub rank_f: usize,
    pub rank_phi: usize,
    pub rank_phi_next: usize,
    pub depth: Depth,
    pub rank_ok: bool,
    pub depth_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub steps: Vec<ExactnessStep>,
    pub overall: bool,
}

impl ExactnessReport {
    pub fn render_lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                format!(
                    "i={}: rank F={} phi={} next={} ({}), depth {} >= {} ({})",
                    s.index,
                    s.rank_f,
                    s.rank_phi,
                    s.rank_phi_next,
                    if s.rank_ok { "ok" } else { "FAIL" },
                    s.depth,
                    s.index,
                    if s.depth_ok { "ok" } else { "FAIL" },
                )
            })
            .collect();
        out.push(format!(
            "exact: {}",
            if self.overall { "yes" } else { "no" }
        ));
        out
    }
}

/// Buchsbaum-Eisenbud test: the complex is exact in positive degrees
/// iff rank F_i = rank phi_i + rank phi_{i+1} and depth I(phi_i) >= i
/// for every i = 1..l.
pub fn be_exactness<C: Coefficient>(
    c: &FreeComplex<C>,
    cert: &mut Certificate,
) -> ExactnessReport {
    let l = c.length();
    let data: Vec<(usize, ReducedGB<C>)> =
        (1..=l).map(|i| rank_and_ideal(c.phi(i), cert)).collect();
    let mut steps = Vec::with_capacity(l);
    for i in 1..=l {
        let (rank_phi, ref ideal) = data[i - 1];
        let rank_phi_next = if i < l { data[i].0 } else { 0 };
        let rank_f = c.rank_f(i);
        let rank_ok = rank_f == rank_phi + rank_phi_next;
        let depth = ideal_depth(ideal);
        let depth_ok = depth.at_least(i as i64);
        steps.push(ExactnessStep {
            index: i,
            rank_f,
            rank_phi,
            rank_phi_next,
            depth,
            rank_ok,
            depth_ok,
        });
    }
    let overall = steps.iter().all(|s| s.rank_ok && s.depth_ok);
    ExactnessReport { steps, overall }
}

/// Iterated syzygies starting from the presentation. Returns the
/// complex built so far and whether the kernel vanished within the cap;
/// the first map is the presentation itself, so coker(phi_1) is the
/// input module on the nose.
pub fn resolution_steps<C: Coefficient>(
    l: &FPModule<C>,
    cap: usize,
    cert: &mut Certificate,
) -> (FreeComplex<C>, bool) {
    let ring = l.ring().clone();
    if l.presentation().cols() == 0 {
        return (FreeComplex::trivial(&ring, l.gens()), true);
    }
    let mut ranks = vec![l.gens()];
    let mut maps: Vec<PolyMatrix<C>> = vec![l.presentation().clone()];
    let complete;
    loop {
        let last = maps.last().expect("at least the presentation");
        ranks.push(last.cols());
        if maps.len() == cap {
            // the cap counts maps; one more syzygy run decides whether
            // we actually finished at the boundary
            complete = syzygies(last, cert).cols() == 0;
            break;
        }
        let next = syzygies(last, cert);
        if next.cols() == 0 {
            complete = true;
            break;
        }
        maps.push(next);
    }
    let complex = FreeComplex::new(&ring, ranks, maps).expect("syzygies compose to zero");
    (complex, complete)
}

/// Free resolution of L, truncated at `cap` maps. By Hilbert's syzygy
/// theorem the default cap of nvars + 1 suffices for the corpus.
pub fn free_resolution<C: Coefficient>(
    l: &FPModule<C>,
    cap: usize,
    cert: &mut Certificate,
) -> Result<FreeComplex<C>> {
    assert!(cap >= 1, "resolution cap must allow the presentation");
    let (complex, complete) = resolution_steps(l, cap, cert);
    if complete {
        Ok(complex)
    } else {
        Err(Error::CapExceeded { cap })
    }
}

pub fn default_resolution_cap(ring: &Ring) -> usize {
    ring.nvars() + 1
}

/// Homology of a chain of module maps, maps[i] = phi_{i+1} : M_{i+1}
/// -> M_i. Returns H_0 .. H_l. Consecutive composability is checked at
/// the fingerprint level (image of the composite must vanish), since
/// composites of presented-module maps can be nonzero matrices that
/// still act as zero.
pub fn complex_homology<C: Coefficient>(
    maps: &[ModuleMap<C>],
    cert: &mut Certificate,
) -> Result<Vec<FPModule<C>>> {
    assert!(!maps.is_empty(), "homology needs at least one map");
    for i in 0..maps.len() - 1 {
        assert_eq!(
            maps[i].source(),
            maps[i + 1].target(),
            "maps do not chain at position {}",
            i + 1
        );
        let composite = maps[i].compose(&maps[i + 1]);
        if !composite.image().is_zero(cert) {
            return Err(Error::NotAComplex { index: i + 1 });
        }
    }
    let l = maps.len();
    let mut out = Vec::with_capacity(l + 1);
    for i in 0..=l {
        let cycles: Submodule<C> = if i == 0 {
            Submodule::full(maps[0].target().clone())
        } else {
            maps[i - 1].kernel(cert)
        };
        let h = if i < l {
            cycles.quotient_by(&maps[i].image(), cert)?
        } else {
            cycles.quotient_by(&Submodule::zero(cycles.ambient().clone()), cert)?
        };
        out.push(h);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, RingData};
    use crate::scalar::{RatFun, Rational};
    use proptest::prelude::*;

    fn ring2() -> Ring {
        RingData::rational(&["x1", "x2"], MonomialOrder::GrevLex)
    }

    fn pring() -> Ring {
        RingData::parametric(&["u1"], &["x1", "x2"], MonomialOrder::GrevLex)
    }

    fn pp(r: &Ring, s: &str) -> Poly<Rational> {
        parse_poly(r, s).unwrap()
    }

    fn mat(r: &Ring, rows: &[&[&str]]) -> PolyMatrix<Rational> {
        let rws: Vec<Vec<Poly<Rational>>> = rows
            .iter()
            .map(|row| row.iter().map(|s| pp(r, s)).collect())
            .collect();
        PolyMatrix::from_rows(r, rws)
    }

    fn c0() -> Certificate {
        Certificate::new(0)
    }

    #[test]
    fn rank_of_standard_matrices() {
        let r = ring2();
        let mut cert = c0();
        assert_eq!(rank_matrix(&PolyMatrix::<Rational>::identity(&r, 2), &mut cert), 2);
        assert_eq!(rank_matrix(&PolyMatrix::<Rational>::zero(&r, 2, 3), &mut cert), 0);
        assert_eq!(rank_matrix(&mat(&r, &[&["x1", "x2"]]), &mut cert), 1);
    }

    #[test]
    fn rank_sees_parametric_cancellation() {
        let r = pring();
        let mut cert = Certificate::new(1);
        let rows: Vec<Vec<Poly<RatFun>>> = vec![
            vec![parse_poly(&r, "x1").unwrap(), parse_poly(&r, "x2").unwrap()],
            vec![
                parse_poly(&r, "u1*x1").unwrap(),
                parse_poly(&r, "u1*x2").unwrap(),
            ],
        ];
        let a = PolyMatrix::from_rows(&r, rows);
        // second row is u1 times the first, so the determinant cancels
        assert_eq!(rank_matrix(&a, &mut cert), 1);
    }

    #[test]
    fn determinantal_ideals() {
        let r = ring2();
        let mut cert = c0();
        let row = mat(&r, &[&["x1", "x2"]]);
        let gb = determinantal_ideal(&row, 1, &mut cert);
        let strs: Vec<String> = gb.polys().iter().map(|p| p.render()).collect();
        assert_eq!(strs, vec!["x1", "x2"]);

        let kos2 = mat(&r, &[&["x2"], &["-x1"]]);
        let gb2 = determinantal_ideal(&kos2, 1, &mut cert);
        let strs2: Vec<String> = gb2.polys().iter().map(|p| p.render()).collect();
        assert_eq!(strs2, vec!["x1", "x2"]);

        let eye = PolyMatrix::<Rational>::identity(&r, 2);
        assert!(determinantal_ideal(&eye, 2, &mut cert).is_unit_ideal());

        // zero map: rank 0, critical ideal (1), infinite depth
        let z = PolyMatrix::<Rational>::zero(&r, 2, 1);
        let (d, crit) = rank_and_ideal(&z, &mut cert);
        assert_eq!(d, 0);
        assert!(crit.is_unit_ideal());
    }

    #[test]
    fn koszul_complex_shape_and_exactness() {
        let r = ring2();
        let mut cert = c0();
        let k = koszul_complex(&r, &[pp(&r, "x1"), pp(&r, "x2")]);
        assert_eq!(k.ranks(), &[1, 2, 1]);
        assert_eq!(k.phi(1), &mat(&r, &[&["x1", "x2"]]));
        assert_eq!(k.phi(2), &mat(&r, &[&["x2"], &["-x1"]]));

        let report = be_exactness(&k, &mut cert);
        assert!(report.overall);
        assert_eq!(report.steps[0].rank_phi, 1);
        assert_eq!(report.steps[1].rank_phi, 1);
        assert_eq!(report.steps[0].depth, Depth::Finite(2));
        assert_eq!(report.steps[1].depth, Depth::Finite(2));
    }

    #[test]
    fn short_complexes_exactness() {
        let r = ring2();
        let mut cert = c0();
        // 0 -> R -x1-> R is exact (injective)
        let inj = FreeComplex::new(&r, vec![1, 1], vec![mat(&r, &[&["x1"]])]).unwrap();
        assert!(be_exactness(&inj, &mut cert).overall);

        // 0 -> R -0-> R fails the rank condition at i = 1
        let z = FreeComplex::new(&r, vec![1, 1], vec![mat(&r, &[&["0"]])]).unwrap();
        let report = be_exactness(&z, &mut cert);
        assert!(!report.overall);
        assert!(!report.steps[0].rank_ok);
        // vacuous depth condition still holds: I(0) = (1)
        assert!(report.steps[0].depth_ok);
        assert_eq!(report.steps[0].depth, Depth::Infinite);
    }

    #[test]
    fn non_complexes_are_rejected() {
        let r = ring2();
        let m = mat(&r, &[&["x1"]]);
        let err = FreeComplex::new(&r, vec![1, 1, 1], vec![m.clone(), m]).unwrap_err();
        assert_eq!(err, Error::NotAComplex { index: 1 });
    }

    #[test]
    fn resolutions_of_small_modules() {
        let r = ring2();
        let mut cert = c0();

        let principal = FPModule::cyclic(&r, &[pp(&r, "x1")]);
        let res = free_resolution(&principal, 3, &mut cert).unwrap();
        assert_eq!(res.ranks(), &[1, 1]);
        assert_eq!(res.phi(1), &mat(&r, &[&["x1"]]));

        let point = FPModule::cyclic(&r, &[pp(&r, "x1"), pp(&r, "x2")]);
        let res2 = free_resolution(&point, 3, &mut cert).unwrap();
        assert_eq!(res2.ranks(), &[1, 2, 1]);
        assert_eq!(res2.phi(2), &mat(&r, &[&["x2"], &["-x1"]]));
        assert!(be_exactness(&res2, &mut cert).overall);

        let free = FPModule::<Rational>::free(&r, 2);
        let res3 = free_resolution(&free, 3, &mut cert).unwrap();
        assert_eq!(res3.length(), 0);
        assert_eq!(res3.ranks(), &[2]);

        let err = free_resolution(&point, 1, &mut cert).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 1 });
        let (partial, complete) = resolution_steps(&point, 1, &mut cert);
        assert!(!complete);
        assert_eq!(partial.length(), 1);
    }

    #[test]
    fn homology_of_basic_complexes() {
        let r = ring2();
        let mut cert = c0();
        let free1 = FPModule::<Rational>::free(&r, 1);

        // 0 -> R -x1-> R: H_1 = 0, H_0 = R/(x1)
        let by_x1 = ModuleMap::multiplication(&free1, &pp(&r, "x1"));
        let h = complex_homology(&[by_x1], &mut cert).unwrap();
        assert_eq!(h.len(), 2);
        assert!(!h[0].is_zero(&mut cert));
        assert!(h[1].is_zero(&mut cert));
        let rx1 = FPModule::cyclic(&r, &[pp(&r, "x1")]);
        assert_eq!(h[0].fingerprint(&mut cert), rx1.fingerprint(&mut cert));

        // zero maps: homology is the module itself everywhere
        let z = ModuleMap::zero_map(&free1, &free1).unwrap();
        let hz = complex_homology(&[z.clone(), z], &mut cert).unwrap();
        for hi in &hz {
            assert_eq!(
                hi.fingerprint(&mut cert),
                free1.fingerprint(&mut cert)
            );
        }
    }

    #[test]
    fn homology_of_koszul_as_module_maps() {
        let r = ring2();
        let mut cert = c0();
        let k = koszul_complex(&r, &[pp(&r, "x1"), pp(&r, "x2")]);
        let modules: Vec<FPModule<Rational>> = k
            .ranks()
            .iter()
            .map(|&g| FPModule::free(&r, g))
            .collect();
        let maps: Vec<ModuleMap<Rational>> = (1..=k.length())
            .map(|i| {
                ModuleMap::lift_map(k.phi(i).clone(), &modules[i], &modules[i - 1], &mut cert)
                    .unwrap()
            })
            .collect();
        let h = complex_homology(&maps, &mut cert).unwrap();
        let point = FPModule::cyclic(&r, &[pp(&r, "x1"), pp(&r, "x2")]);
        assert_eq!(h[0].fingerprint(&mut cert), point.fingerprint(&mut cert));
        assert!(h[1].is_zero(&mut cert));
        assert!(h[2].is_zero(&mut cert));
    }

    #[test]
    fn homology_rejects_non_complexes() {
        let r = ring2();
        let mut cert = c0();
        let free1 = FPModule::<Rational>::free(&r, 1);
        let v = ModuleMap::multiplication(&free1, &pp(&r, "x1"));
        let err = complex_homology(&[v.clone(), v], &mut cert).unwrap_err();
        assert_eq!(err, Error::NotAComplex { index: 1 });
    }

    #[test]
    fn resolution_homology_recovers_the_module() {
        let r = ring2();
        let mut cert = c0();
        let l = FPModule::cyclic(&r, &[pp(&r, "x1*x2")])
            .direct_sum(&FPModule::cyclic(&r, &[pp(&r, "x1")]))
            .unwrap();
        let res = free_resolution(&l, 4, &mut cert).unwrap();
        let modules: Vec<FPModule<Rational>> = res
            .ranks()
            .iter()
            .map(|&g| FPModule::free(&r, g))
            .collect();
        let maps: Vec<ModuleMap<Rational>> = (1..=res.length())
            .map(|i| {
                ModuleMap::lift_map(res.phi(i).clone(), &modules[i], &modules[i - 1], &mut cert)
                    .unwrap()
            })
            .collect();
        let h = complex_homology(&maps, &mut cert).unwrap();
        assert_eq!(h[0].fingerprint(&mut cert), l.fingerprint(&mut cert));
        for hi in &h[1..] {
            assert!(hi.is_zero(&mut cert));
        }
    }

    fn arb_matrix(r: Ring) -> impl Strategy<Value = PolyMatrix<Rational>> {
        use crate::poly::Monomial;
        let n = r.nvars();
        (1usize..4, 1usize..4)
            .prop_flat_map(move |(rows, cols)| {
                let r = r.clone();
                prop::collection::vec(
                    prop::collection::vec((prop::collection::vec(0u32..2, n), -2i64..3), 0..3),
                    rows * cols,
                )
                .prop_map(move |cells| {
                    let entries: Vec<Poly<Rational>> = cells
                        .into_iter()
                        .map(|ts| {
                            Poly::from_terms(
                                &r,
                                ts.into_iter().map(|(e, c)| {
                                    (Monomial::from_exps(e), Rational::from_integer(c.into()))
                                }),
                            )
                        })
                        .collect();
                    let rws: Vec<Vec<Poly<Rational>>> =
                        entries.chunks(cols).map(|c| c.to_vec()).collect();
                    PolyMatrix::from_rows(&r, rws)
                })
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn rank_is_transpose_invariant_and_bounded(a in arb_matrix(ring2())) {
            let mut cert = c0();
            let d = rank_matrix(&a, &mut cert);
            prop_assert!(d <= a.rows().min(a.cols()));
            prop_assert_eq!(d, rank_matrix(&a.transpose(), &mut cert));
        }

        #[test]
        fn first_determinantal_ideal_is_the_entry_ideal(a in arb_matrix(ring2())) {
            let r = ring2();
            let mut cert = c0();
            let gb = determinantal_ideal(&a, 1, &mut cert);
            let mut entries: Vec<Poly<Rational>> = Vec::new();
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    entries.push(a.entry(i, j).clone());
                }
            }
            prop_assert_eq!(gb, gb_of_polys(&r, &entries, &mut cert));
        }

        #[test]
        fn koszul_resolves_regular_sequences(c in 1usize..3) {
            let r = ring2();
            let mut cert = c0();
            let fs: Vec<Poly<Rational>> = (0..c).map(|i| Poly::var(&r, i)).collect();
            let k = koszul_complex(&r, &fs);
            prop_assert!(be_exactness(&k, &mut cert).overall);
            let l = FPModule::cyclic(&r, &fs);
            let res = free_resolution(&l, 4, &mut cert).unwrap();
            prop_assert_eq!(res.ranks(), k.ranks());
        }
    }
}
