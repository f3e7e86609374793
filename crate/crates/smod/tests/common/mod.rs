//! Shared fixtures for the integration suites: corpus paths, verification
//! drivers, seeded random data, and brute-force Koszul oracles that avoid
//! the resolution machinery on purpose.

// each test target compiles its own copy and none uses every helper
#![allow(dead_code)]

use std::path::PathBuf;

use rand::RngExt;
use rand_chacha::ChaCha8Rng;

use smod::cert::Certificate;
use smod::cli::verify::run_verification;
use smod::fpmod::{FPModule, ModuleMap};
use smod::poly::{
    parse_poly, Coefficient, MonomialOrder, Poly, PolyMatrix, Ring, RingData,
};
use smod::resolve::{complex_homology, koszul_complex};
use smod::scalar::RatFun;

pub fn corpus(rel: &str) -> PathBuf {
    PathBuf::from(format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR")))
}

pub fn qc() -> Certificate {
    Certificate::new(0)
}

pub fn pring() -> Ring {
    RingData::parametric(&["u1"], &["x1", "x2"], MonomialOrder::GrevLex)
}

pub fn pf(ring: &Ring, text: &str) -> Poly<RatFun> {
    parse_poly(ring, text).unwrap()
}

/// Run one registered theorem on corpus files and demand a clean sweep.
pub fn run_task(theorem: &str, inputs: &[&str], trials: usize) {
    let paths: Vec<PathBuf> = inputs.iter().map(|r| corpus(r)).collect();
    let report = run_verification(theorem, &paths, trials, 0, 7, None)
        .unwrap_or_else(|e| panic!("{theorem} on {inputs:?} failed to run: {e}"));
    let failures: Vec<&str> = report
        .trials
        .iter()
        .filter(|t| !t.pass)
        .map(|t| t.detail.as_str())
        .collect();
    assert!(
        failures.is_empty(),
        "{theorem} on {inputs:?}: {} of {trials} trials failed: {failures:?}",
        failures.len()
    );
}

/// Random polynomial of total degree <= 2 in u1, x1, x2 with small
/// integer coefficients. Deterministic in the rng state.
pub fn random_poly(ring: &Ring, rng: &mut ChaCha8Rng) -> Poly<RatFun> {
    let basis = [
        "1", "u1", "x1", "x2", "u1*x1", "u1*x2", "x1^2", "x1*x2", "x2^2", "u1^2",
    ];
    let mut acc = parse_poly::<RatFun>(ring, "0").unwrap();
    for mono in basis {
        let c: i64 = rng.random_range(-2..=2);
        if c != 0 {
            let term = parse_poly::<RatFun>(ring, &format!("{c}*{mono}")).unwrap();
            acc = acc.add(&term);
        }
    }
    acc
}

pub fn random_matrix(ring: &Ring, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> PolyMatrix<RatFun> {
    let data: Vec<Vec<Poly<RatFun>>> = (0..rows)
        .map(|_| (0..cols).map(|_| random_poly(ring, rng)).collect())
        .collect();
    PolyMatrix::from_rows(ring, data)
}

pub fn shuffle<T>(items: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
}

/// M^k with the generator ordering of iterated direct sums.
pub fn power_module<C: Coefficient>(m: &FPModule<C>, k: usize) -> FPModule<C> {
    let mut acc = FPModule::free(m.ring(), 0);
    for _ in 0..k {
        acc = acc.direct_sum(m).unwrap();
    }
    acc
}

/// The map M^cols -> M^rows induced by a matrix over the ring, i.e. the
/// Kronecker product with the identity on M's generators.
pub fn induced_map<C: Coefficient>(
    a: &PolyMatrix<C>,
    m: &FPModule<C>,
    cert: &mut Certificate,
) -> ModuleMap<C> {
    let source = power_module(m, a.cols());
    let target = power_module(m, a.rows());
    let v0 = a.tensor(&PolyMatrix::identity(m.ring(), m.gens()));
    ModuleMap::lift_map(v0, &source, &target, cert).expect("ring matrices act on any module")
}

/// Brute-force Tor_*(R/(fs), M) as the homology of K(fs) tensor M,
/// bypassing free_resolution entirely. Returns degrees 0..=len(fs).
pub fn tor_by_koszul<C: Coefficient>(
    fs: &[Poly<C>],
    m: &FPModule<C>,
    cert: &mut Certificate,
) -> Vec<FPModule<C>> {
    let ring = m.ring().clone();
    let k = koszul_complex(&ring, fs);
    let maps: Vec<ModuleMap<C>> = (1..=k.length())
        .map(|i| induced_map(k.phi(i), m, cert))
        .collect();
    complex_homology(&maps, cert).expect("Koszul differentials compose to zero")
}

/// Brute-force Ext^*(R/(fs), M) as the cohomology of Hom(K(fs), M). The
/// cochain complex is reversed into a chain complex, so H_j of the
/// reversal is Ext^{c-j}; the returned vector is indexed by Ext degree
/// 0..=len(fs).
pub fn ext_by_koszul<C: Coefficient>(
    fs: &[Poly<C>],
    m: &FPModule<C>,
    cert: &mut Certificate,
) -> Vec<FPModule<C>> {
    let ring = m.ring().clone();
    let k = koszul_complex(&ring, fs);
    let c = k.length();
    // reversed chain: position j holds Hom(K_{c-j}, M); the boundary
    // from j to j-1 is the transpose of phi_{c-j+1}
    let maps: Vec<ModuleMap<C>> = (1..=c)
        .map(|j| induced_map(&k.phi(c - j + 1).transpose(), m, cert))
        .collect();
    let h = complex_homology(&maps, cert).expect("transposed differentials compose to zero");
    (0..=c).map(|i| h[c - i].clone()).collect()
}
