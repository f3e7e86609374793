//! Randomized theorem verification.
//!
//! Every task compares two computations that share no intermediate
//! results: the parametric route computes over Q(u)[x] and substitutes
//! the finished answer, the direct route substitutes the raw inputs and
//! recomputes everything over Q[x]. Agreement at a certified point is
//! therefore evidence, not bookkeeping.
//!
//! The parametric route runs once, during preparation, and charges all
//! of its inversions to the run certificate. Points are then sampled
//! against the finished certificate, so a clean run substitutes without
//! surprises; any BadSubstitution or mismatch that still occurs is
//! recorded as a failing trial, never papered over.

use std::path::{Path, PathBuf};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::fpmod::{colon_and_product, FPModule, ModuleMap, Submodule};
use crate::groebner::ideal::{dim_ideal, gb_of_polys};
use crate::homology::{ext_modules, grade_module, grade_on, is_perfect, proj_dim, tor_modules};
use crate::io;
use crate::poly::{Coefficient, Poly, PolyMatrix, Ring, VecPoly};
use crate::resolve::{be_exactness, complex_homology, FreeComplex};
use crate::scalar::{rational_string, RatFun, Rational, SubstPoint};
use crate::specialize::{
    sample_alpha, specialize_complex, specialize_gb, specialize_ideal, specialize_map,
    specialize_module, subst_poly, subst_vec,
};

use super::report::{Report, TaskEcho, TrialRecord};

/// One registered theorem with a committed corpus invocation.
pub struct TaskSpec {
    pub theorem: &'static str,
    /// Input files, relative to the corpus directory.
    pub inputs: &'static [&'static str],
    pub blurb: &'static str,
}

pub const REGISTRY: &[TaskSpec] = &[
    TaskSpec {
        theorem: "exactness_1_5",
        inputs: &["complexes/koszul_u2.cx"],
        blurb: "exact free complexes stay exact after substitution",
    },
    TaskSpec {
        theorem: "ses_2_4",
        inputs: &["maps/shift_embed.map"],
        blurb: "short exact sequences stay short exact",
    },
    TaskSpec {
        theorem: "kic_2_5",
        inputs: &["maps/mul_ux1.map"],
        blurb: "kernel, image and cokernel commute with substitution",
    },
    TaskSpec {
        theorem: "projdim_2_6",
        inputs: &["modules/ci_shift.mod"],
        blurb: "projective dimension is preserved",
    },
    TaskSpec {
        theorem: "homology_2_7",
        inputs: &["complexes/halfway.cx"],
        blurb: "homology of a free complex commutes with substitution",
    },
    TaskSpec {
        theorem: "dsum_3_1",
        inputs: &["modules/cyc_ux1.mod", "modules/cyc_x2sq.mod"],
        blurb: "direct sums commute with substitution",
    },
    TaskSpec {
        theorem: "subops_3_2",
        inputs: &["modules/free2.mod", "vectors/diag_u.vec", "vectors/skew.vec"],
        blurb: "sum, intersection and quotient commute with substitution",
    },
    TaskSpec {
        theorem: "gens_3_3",
        inputs: &["rings/one_param.ring", "ideals/mixed_u.id"],
        blurb: "substituted generators generate the substituted ideal",
    },
    TaskSpec {
        theorem: "anndim_3_4",
        inputs: &["modules/tors_mix.mod"],
        blurb: "annihilator and dimension are preserved",
    },
    TaskSpec {
        theorem: "colon_3_6",
        inputs: &["modules/cyc_prod.mod", "ideals/colon_probe.id"],
        blurb: "colon submodule and ideal multiple commute with substitution",
    },
    TaskSpec {
        theorem: "tor_4_2",
        inputs: &["modules/cyc_ux1.mod", "modules/cyc_x1.mod"],
        blurb: "Tor modules specialize to Tor of the specializations",
    },
    TaskSpec {
        theorem: "ext_4_3",
        inputs: &["modules/cyc_ux1.mod", "modules/cyc_x1.mod"],
        blurb: "Ext modules specialize to Ext of the specializations",
    },
    TaskSpec {
        theorem: "grade_4_4",
        inputs: &["modules/free1.mod", "ideals/grade_two.id"],
        blurb: "grade is preserved",
    },
    TaskSpec {
        theorem: "perfect_4_5",
        inputs: &["modules/ci_shift.mod"],
        blurb: "grade, projective dimension and perfection are preserved",
    },
];

pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.theorem).collect()
}

/// Outcome of one comparison at one point.
struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

type TrialFn = Box<dyn FnMut(&SubstPoint, &mut Certificate) -> Result<Outcome>>;

/// Fresh certificate for the direct route: it computes over Q[x],
/// where nothing parametric can be inverted, and must not feed the
/// sampling certificate of the parametric route.
fn qc() -> Certificate {
    Certificate::new(0)
}

pub fn run_verification(
    theorem: &str,
    input_paths: &[PathBuf],
    trials: usize,
    seed: u64,
    bound: i64,
    forced_alpha: Option<&str>,
) -> Result<Report> {
    if trials == 0 {
        return Err(Error::input("at least one trial is required"));
    }
    if !REGISTRY.iter().any(|t| t.theorem == theorem) {
        return Err(Error::input(format!(
            "unknown theorem `{theorem}`; `smod corpus list` names the registered ones"
        )));
    }
    let (ring, mut cert, mut run_trial) = prepare_task(theorem, input_paths)?;
    let forced = match forced_alpha {
        Some(text) => Some(SubstPoint::parse(text, ring.nparams())?),
        None => None,
    };

    let mut report = Report::new(TaskEcho {
        command: "verify".into(),
        theorem: Some(theorem.into()),
        inputs: input_paths
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
        trials,
        seed,
        bound,
    });

    for t in 0..trials {
        let alpha = match &forced {
            Some(a) => a.clone(),
            None => sample_alpha(seed.wrapping_add(t as u64), &cert, bound)?,
        };
        let mut prefix = String::new();
        if !cert.is_good(&alpha) {
            // only reachable with a forced point: sampling never
            // returns one the certificate excludes
            let vanishing: Vec<String> = cert
                .factors()
                .filter(|f| num::Zero::is_zero(&f.eval(&alpha)))
                .map(|f| f.to_string_with(ring.params()))
                .collect();
            prefix = format!(
                "alpha excluded by certificate factor(s) {}; ",
                vanishing.join(", ")
            );
        }
        let outcome = match run_trial(&alpha, &mut cert) {
            Ok(o) => o,
            Err(e) => fail(format!("{e}")),
        };
        report.push(TrialRecord {
            alpha: alpha.values().iter().map(rational_string).collect(),
            pass: outcome.pass,
            detail: format!("{prefix}{}", outcome.detail),
            cert_factors: cert.factor_strings(ring.params()),
            ms: 0,
        });
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Input loading

enum Obj {
    Module(FPModule<RatFun>),
    Complex(FreeComplex<RatFun>),
    Map(ModuleMap<RatFun>),
    /// Headerless text, parsed by the task against the run ring.
    Raw(String),
}

fn prepare_task(theorem: &str, paths: &[PathBuf]) -> Result<(Ring, Certificate, TrialFn)> {
    let mut ring: Option<Ring> = None;
    for p in paths {
        if let Some(r) = io::peek_ring(p)? {
            ring = Some(r);
            break;
        }
    }
    let ring = ring.ok_or_else(|| {
        Error::input("no input carries a ring; start with a ring, module, complex or map file")
    })?;
    let mut cert = Certificate::new(ring.nparams());
    let objs = load_objects(paths, &ring, &mut cert)?;
    let trial = build_task(theorem, &ring, objs, &mut cert)?;
    Ok((ring, cert, trial))
}

fn load_objects(paths: &[PathBuf], ring: &Ring, cert: &mut Certificate) -> Result<Vec<Obj>> {
    let mut objs = Vec::new();
    // names must be unambiguous: the same file may appear twice (Tor of
    // a module with itself), two different files may not share a name
    let mut seen: std::collections::HashMap<String, PathBuf> = std::collections::HashMap::new();
    let mut claim = |path: &Path, name: String| -> Result<()> {
        match seen.get(&name) {
            Some(prev) if prev != path => Err(Error::input(format!(
                "{}: object name `{name}` already used by {}",
                path.display(),
                prev.display()
            ))),
            _ => {
                seen.insert(name, path.to_path_buf());
                Ok(())
            }
        }
    };
    for p in paths {
        let text = std::fs::read_to_string(p)
            .map_err(|e| Error::input(format!("{}: {e}", p.display())))?;
        match io::detect_kind(&text) {
            io::FileKind::Ring => {
                let r = io::load_ring(p)?;
                check_ring(p, ring, &r)?;
                // carries no data beyond the ring itself
            }
            io::FileKind::Module => {
                let (name, m) = io::load_module(p)?;
                claim(p, name)?;
                check_ring(p, ring, m.ring())?;
                charge_matrix(m.presentation(), cert);
                objs.push(Obj::Module(m));
            }
            io::FileKind::Complex => {
                let (name, c) = io::load_complex(p)?;
                claim(p, name)?;
                check_ring(p, ring, c.ring())?;
                for a in c.maps() {
                    charge_matrix(a, cert);
                }
                objs.push(Obj::Complex(c));
            }
            io::FileKind::Map => {
                let (name, v) = io::load_map(p, cert)?;
                claim(p, name)?;
                check_ring(p, ring, v.source().ring())?;
                charge_matrix(v.v0(), cert);
                charge_matrix(v.v1(), cert);
                charge_matrix(v.source().presentation(), cert);
                charge_matrix(v.target().presentation(), cert);
                objs.push(Obj::Map(v));
            }
            io::FileKind::Matrix => {
                return Err(Error::input(format!(
                    "{}: matrix files are not verification inputs",
                    p.display()
                )));
            }
            io::FileKind::Vectors => objs.push(Obj::Raw(text)),
        }
    }
    Ok(objs)
}

fn check_ring(path: &Path, expected: &Ring, found: &Ring) -> Result<()> {
    if expected != found {
        return Err(Error::input(format!(
            "{}: ring differs from the ring of the first input",
            path.display()
        )));
    }
    Ok(())
}

/// Register every coefficient denominator of an input up front, so the
/// sampled points are safe for plain substitution of the inputs too.
fn charge_matrix(a: &PolyMatrix<RatFun>, cert: &mut Certificate) {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for (_, c) in a.entry(i, j).terms() {
                c.note_use(cert);
            }
        }
    }
}

// ---------------------------------------------------------------------
// Task builders

fn usage(theorem: &str, wants: &str) -> Error {
    Error::input(format!("{theorem} expects inputs: {wants}"))
}

fn build_task(
    theorem: &str,
    ring: &Ring,
    objs: Vec<Obj>,
    cert: &mut Certificate,
) -> Result<TrialFn> {
    match theorem {
        "exactness_1_5" => build_exactness(objs, cert),
        "ses_2_4" => build_ses(objs, cert),
        "kic_2_5" => build_kic(objs, cert),
        "projdim_2_6" => build_projdim(objs, cert),
        "homology_2_7" => build_homology(objs, cert),
        "dsum_3_1" => build_dsum(objs, cert),
        "subops_3_2" => build_subops(ring, objs, cert),
        "gens_3_3" => build_gens(ring, objs, cert),
        "anndim_3_4" => build_anndim(objs, cert),
        "colon_3_6" => build_colon(objs, cert),
        "tor_4_2" => build_tor(ring, objs, cert),
        "ext_4_3" => build_ext(ring, objs, cert),
        "grade_4_4" => build_grade(objs, cert),
        "perfect_4_5" => build_perfect(objs, cert),
        other => Err(Error::input(format!(
            "unknown theorem `{other}`; see `smod corpus list`"
        ))),
    }
}

fn one_complex(theorem: &str, objs: Vec<Obj>) -> Result<FreeComplex<RatFun>> {
    match <[Obj; 1]>::try_from(objs) {
        Ok([Obj::Complex(c)]) => Ok(c),
        _ => Err(usage(theorem, "one complex file")),
    }
}

fn one_map(theorem: &str, objs: Vec<Obj>) -> Result<ModuleMap<RatFun>> {
    match <[Obj; 1]>::try_from(objs) {
        Ok([Obj::Map(v)]) => Ok(v),
        _ => Err(usage(theorem, "one map file")),
    }
}

fn one_module(theorem: &str, objs: Vec<Obj>) -> Result<FPModule<RatFun>> {
    match <[Obj; 1]>::try_from(objs) {
        Ok([Obj::Module(m)]) => Ok(m),
        _ => Err(usage(theorem, "one module file")),
    }
}

fn two_modules(theorem: &str, objs: Vec<Obj>) -> Result<(FPModule<RatFun>, FPModule<RatFun>)> {
    match <[Obj; 2]>::try_from(objs) {
        Ok([Obj::Module(l), Obj::Module(m)]) => Ok((l, m)),
        _ => Err(usage(theorem, "two module files")),
    }
}

fn module_and_ideal(
    theorem: &str,
    ring: &Ring,
    objs: Vec<Obj>,
    cert: &mut Certificate,
) -> Result<(FPModule<RatFun>, Vec<Poly<RatFun>>)> {
    match <[Obj; 2]>::try_from(objs) {
        Ok([Obj::Module(l), Obj::Raw(text)]) => {
            let gens = io::parse_ideal(ring, &text)?;
            for p in &gens {
                for (_, c) in p.terms() {
                    c.note_use(cert);
                }
            }
            Ok((l, gens))
        }
        _ => Err(usage(theorem, "a module file and an ideal file")),
    }
}

// Theorem: an exact complex of free modules stays exact, with the same
// differential ranks, after substitution at a good point.
fn build_exactness(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let c = one_complex("exactness_1_5", objs)?;
    let rep_r = be_exactness(&c, cert);
    if !rep_r.overall {
        return Err(Error::input(
            "the input complex is not exact over the parametric ring",
        ));
    }
    let ranks_r: Vec<usize> = rep_r.steps.iter().map(|s| s.rank_phi).collect();
    Ok(Box::new(move |alpha, cert| {
        let ca = specialize_complex(&c, alpha, cert)?;
        let mut q = qc();
        let rep_a = be_exactness(&ca, &mut q);
        let ranks_a: Vec<usize> = rep_a.steps.iter().map(|s| s.rank_phi).collect();
        if !rep_a.overall {
            return Ok(fail("specialized complex fails the exactness criterion"));
        }
        if ranks_a != ranks_r {
            return Ok(fail(format!(
                "differential ranks changed: {ranks_r:?} -> {ranks_a:?}"
            )));
        }
        Ok(pass(format!(
            "exact after substitution; differential ranks {ranks_r:?} preserved"
        )))
    }))
}

// Theorem: 0 -> L -> M -> coker -> 0 stays short exact, and the
// specialized cokernel is the cokernel of the specialized map.
fn build_ses(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let v = one_map("ses_2_4", objs)?;
    if !v.kernel(cert).is_zero(cert) {
        return Err(Error::input(
            "the map is not injective; this task needs a short exact sequence 0 -> L -> M -> N -> 0",
        ));
    }
    let n_r = v.cokernel();
    let p_r = v.cokernel_projection();
    Ok(Box::new(move |alpha, cert| {
        let va = specialize_map(&v, alpha, cert)?;
        let pa = specialize_map(&p_r, alpha, cert)?;
        let n_direct = specialize_module(&n_r, alpha, cert)?;
        let mut q = qc();
        let injective = va.kernel(&mut q).is_zero(&mut q);
        let exact_middle =
            va.image().canonical_gb(&mut q) == pa.kernel(&mut q).canonical_gb(&mut q);
        let surjective = pa.cokernel().is_zero(&mut q);
        let fp_spec = n_direct.fingerprint(&mut q);
        let fp_fresh = va.cokernel().fingerprint(&mut q);
        let commutes = fp_spec == fp_fresh;
        if injective && exact_middle && surjective && commutes {
            Ok(pass(format!(
                "sequence stays short exact; cokernel fingerprints agree (dim {})",
                fp_fresh.dim()
            )))
        } else {
            Ok(fail(format!(
                "injective={injective} exact_middle={exact_middle} surjective={surjective} cokernel_commutes={commutes}"
            )))
        }
    }))
}

// Theorem: kernel, image and cokernel of a map commute with
// substitution (bases for the submodules, fingerprint for the cokernel).
fn build_kic(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let v = one_map("kic_2_5", objs)?;
    let ker_gb_r = v.kernel(cert).canonical_gb(cert);
    let im_gb_r = v.image().canonical_gb(cert);
    let coker_r = v.cokernel();
    Ok(Box::new(move |alpha, cert| {
        let va = specialize_map(&v, alpha, cert)?;
        let ker_spec = specialize_gb(&ker_gb_r, alpha, cert)?;
        let im_spec = specialize_gb(&im_gb_r, alpha, cert)?;
        let coker_spec = specialize_module(&coker_r, alpha, cert)?;
        let mut q = qc();
        let ker_ok = ker_spec.as_slice() == va.kernel(&mut q).canonical_gb(&mut q).gens();
        let im_ok = im_spec.as_slice() == va.image().canonical_gb(&mut q).gens();
        let coker_ok = coker_spec.fingerprint(&mut q) == va.cokernel().fingerprint(&mut q);
        if ker_ok && im_ok && coker_ok {
            Ok(pass("kernel, image and cokernel all commute"))
        } else {
            Ok(fail(format!(
                "kernel={ker_ok} image={im_ok} cokernel={coker_ok}"
            )))
        }
    }))
}

// Theorem: proj.dim of the specialized module equals proj.dim of the
// module.
fn build_projdim(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let l = one_module("projdim_2_6", objs)?;
    let pd_r = proj_dim(&l, cert)?;
    Ok(Box::new(move |alpha, cert| {
        let la = specialize_module(&l, alpha, cert)?;
        let pd_a = proj_dim(&la, &mut qc())?;
        if pd_a == pd_r {
            Ok(pass(format!("proj.dim {pd_a} = {pd_r}")))
        } else {
            Ok(fail(format!("proj.dim changed: {pd_r} -> {pd_a}")))
        }
    }))
}

// Theorem: homology of a free complex commutes with substitution,
// compared at fingerprint level in every degree.
fn build_homology(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let c = one_complex("homology_2_7", objs)?;
    let h_r = free_complex_homology(&c, cert)?;
    Ok(Box::new(move |alpha, cert| {
        let ca = specialize_complex(&c, alpha, cert)?;
        let mut spec_h = Vec::with_capacity(h_r.len());
        for h in &h_r {
            spec_h.push(specialize_module(h, alpha, cert)?);
        }
        let mut q = qc();
        let fresh_h = free_complex_homology(&ca, &mut q)?;
        let mut mismatches = Vec::new();
        for i in 0..h_r.len() {
            if spec_h[i].fingerprint(&mut q) != fresh_h[i].fingerprint(&mut q) {
                mismatches.push(i);
            }
        }
        if mismatches.is_empty() {
            Ok(pass(format!(
                "homology fingerprints agree for i = 0..{}",
                h_r.len() - 1
            )))
        } else {
            Ok(fail(format!("homology differs in degrees {mismatches:?}")))
        }
    }))
}

/// Homology of a free complex, viewed as a chain of maps between free
/// modules. Lifting against a free target cannot fail.
fn free_complex_homology<C: Coefficient>(
    c: &FreeComplex<C>,
    cert: &mut Certificate,
) -> Result<Vec<FPModule<C>>> {
    if c.length() == 0 {
        return Ok(vec![FPModule::free(c.ring(), c.rank_f(0))]);
    }
    let modules: Vec<FPModule<C>> = c
        .ranks()
        .iter()
        .map(|&g| FPModule::free(c.ring(), g))
        .collect();
    let maps: Vec<ModuleMap<C>> = (1..=c.length())
        .map(|i| {
            ModuleMap::lift_map(c.phi(i).clone(), &modules[i], &modules[i - 1], cert)
                .expect("maps between free modules always lift")
        })
        .collect();
    complex_homology(&maps, cert)
}

// Theorem: the direct sum commutes with substitution.
fn build_dsum(objs: Vec<Obj>, _cert: &mut Certificate) -> Result<TrialFn> {
    let (l, m) = two_modules("dsum_3_1", objs)?;
    let sum_r = l.direct_sum(&m)?;
    Ok(Box::new(move |alpha, cert| {
        let sum_spec = specialize_module(&sum_r, alpha, cert)?;
        let la = specialize_module(&l, alpha, cert)?;
        let ma = specialize_module(&m, alpha, cert)?;
        let mut q = qc();
        let fp_spec = sum_spec.fingerprint(&mut q);
        let fp_fresh = la.direct_sum(&ma)?.fingerprint(&mut q);
        if fp_spec == fp_fresh {
            Ok(pass(format!(
                "direct sum fingerprints agree (dim {})",
                fp_fresh.dim()
            )))
        } else {
            Ok(fail("direct sum fingerprints differ"))
        }
    }))
}

// Theorem: M + N, M intersect N and L/M commute with substitution.
fn build_subops(ring: &Ring, objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let (l, m_gens, n_gens) = match <[Obj; 3]>::try_from(objs) {
        Ok([Obj::Module(l), Obj::Raw(mg), Obj::Raw(ng)]) => {
            let rank = Some(l.gens());
            let mg = io::parse_vectors(ring, rank, &mg)?;
            let ng = io::parse_vectors(ring, rank, &ng)?;
            (l, mg, ng)
        }
        _ => {
            return Err(usage(
                "subops_3_2",
                "a module file and two generator-list files",
            ))
        }
    };
    for v in m_gens.iter().chain(&n_gens) {
        for p in v.entries() {
            for (_, c) in p.terms() {
                c.note_use(cert);
            }
        }
    }
    let m = Submodule::new(l.clone(), m_gens.clone());
    let n = Submodule::new(l.clone(), n_gens.clone());
    let sum_gb_r = m.sum(&n)?.canonical_gb(cert);
    let int_gb_r = m.intersect(&n, cert)?.canonical_gb(cert);
    let quot_r = m.quotient_module();
    Ok(Box::new(move |alpha, cert| {
        let sum_spec = specialize_gb(&sum_gb_r, alpha, cert)?;
        let int_spec = specialize_gb(&int_gb_r, alpha, cert)?;
        let quot_spec = specialize_module(&quot_r, alpha, cert)?;

        let la = specialize_module(&l, alpha, cert)?;
        let mg: Result<Vec<VecPoly<Rational>>> =
            m_gens.iter().map(|v| subst_vec(v, alpha, cert)).collect();
        let ng: Result<Vec<VecPoly<Rational>>> =
            n_gens.iter().map(|v| subst_vec(v, alpha, cert)).collect();
        let ma = Submodule::new(la.clone(), mg?);
        let na = Submodule::new(la, ng?);
        let mut q = qc();
        let sum_ok = sum_spec.as_slice() == ma.sum(&na)?.canonical_gb(&mut q).gens();
        let int_ok = int_spec.as_slice() == ma.intersect(&na, &mut q)?.canonical_gb(&mut q).gens();
        let quot_ok = quot_spec.fingerprint(&mut q) == ma.quotient_module().fingerprint(&mut q);
        if sum_ok && int_ok && quot_ok {
            Ok(pass("sum, intersection and quotient all commute"))
        } else {
            Ok(fail(format!(
                "sum={sum_ok} intersection={int_ok} quotient={quot_ok}"
            )))
        }
    }))
}

// Theorem: the substituted generators generate the substituted ideal;
// concretely, substituting the parametric basis reproduces the basis
// recomputed from the substituted generators.
fn build_gens(ring: &Ring, objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let gens = match <[Obj; 1]>::try_from(objs) {
        Ok([Obj::Raw(text)]) => io::parse_ideal(ring, &text)?,
        _ => return Err(usage("gens_3_3", "a ring file and an ideal file")),
    };
    if gens.is_empty() {
        return Err(Error::input("the ideal file lists no generators"));
    }
    for p in &gens {
        for (_, c) in p.terms() {
            c.note_use(cert);
        }
    }
    let ring = ring.clone();
    let gb_r = gb_of_polys(&ring, &gens, cert);
    Ok(Box::new(move |alpha, cert| {
        let basis_spec = specialize_gb(&gb_r, alpha, cert)?;
        let basis_fresh = specialize_ideal(&gens, alpha, cert)?;
        if basis_spec.as_slice() == basis_fresh.gens() {
            Ok(pass(format!(
                "substituted basis matches ({} generators)",
                basis_fresh.gens().len()
            )))
        } else {
            Ok(fail(format!(
                "bases differ: {} substituted vs {} recomputed generators",
                basis_spec.len(),
                basis_fresh.gens().len()
            )))
        }
    }))
}

// Theorem: annihilator and Krull dimension are preserved.
fn build_anndim(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let l = one_module("anndim_3_4", objs)?;
    let ann_r = l.annihilator(cert);
    let dim_r = if l.is_zero(cert) {
        -1
    } else {
        dim_ideal(&ann_r)
    };
    Ok(Box::new(move |alpha, cert| {
        let ann_spec = specialize_gb(&ann_r, alpha, cert)?;
        let la = specialize_module(&l, alpha, cert)?;
        let mut q = qc();
        let ann_fresh = la.annihilator(&mut q);
        let dim_a = if la.is_zero(&mut q) {
            -1
        } else {
            dim_ideal(&ann_fresh)
        };
        let ann_ok = ann_spec.as_slice() == ann_fresh.gens();
        if ann_ok && dim_a == dim_r {
            Ok(pass(format!("dim {dim_a} = {dim_r}; annihilator basis matches")))
        } else {
            Ok(fail(format!(
                "dim {dim_r} -> {dim_a}; annihilator {}",
                if ann_ok { "matches" } else { "differs" }
            )))
        }
    }))
}

// Theorem: the colon submodule 0_L : I and the multiple IL commute
// with substitution.
fn build_colon(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let ring = match objs.first() {
        Some(Obj::Module(l)) => l.ring().clone(),
        _ => return Err(usage("colon_3_6", "a module file and an ideal file")),
    };
    let (l, gens) = module_and_ideal("colon_3_6", &ring, objs, cert)?;
    let (colon_r, prod_r) = colon_and_product(&l, &gens, cert);
    let colon_gb_r = colon_r.canonical_gb(cert);
    let prod_gb_r = prod_r.canonical_gb(cert);
    Ok(Box::new(move |alpha, cert| {
        let colon_spec = specialize_gb(&colon_gb_r, alpha, cert)?;
        let prod_spec = specialize_gb(&prod_gb_r, alpha, cert)?;
        let la = specialize_module(&l, alpha, cert)?;
        let ga: Result<Vec<Poly<Rational>>> =
            gens.iter().map(|p| subst_poly(p, alpha, cert)).collect();
        let mut q = qc();
        let (colon_a, prod_a) = colon_and_product(&la, &ga?, &mut q);
        let colon_ok = colon_spec.as_slice() == colon_a.canonical_gb(&mut q).gens();
        let prod_ok = prod_spec.as_slice() == prod_a.canonical_gb(&mut q).gens();
        if colon_ok && prod_ok {
            Ok(pass("colon and ideal multiple both commute"))
        } else {
            Ok(fail(format!("colon={colon_ok} multiple={prod_ok}")))
        }
    }))
}

// Theorem: Tor_i(L, M) specializes to Tor_i(L_alpha, M_alpha) for all
// i up to the variable count.
fn build_tor(ring: &Ring, objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let (l, m) = two_modules("tor_4_2", objs)?;
    let n = ring.nvars();
    let tors_r = tor_modules(&l, &m, n, cert)?;
    Ok(Box::new(move |alpha, cert| {
        let mut spec = Vec::with_capacity(tors_r.len());
        for t in &tors_r {
            spec.push(specialize_module(t, alpha, cert)?);
        }
        let la = specialize_module(&l, alpha, cert)?;
        let ma = specialize_module(&m, alpha, cert)?;
        let mut q = qc();
        let fresh = tor_modules(&la, &ma, n, &mut q)?;
        let mut mismatches = Vec::new();
        for i in 0..=n {
            if spec[i].fingerprint(&mut q) != fresh[i].fingerprint(&mut q) {
                mismatches.push(i);
            }
        }
        if mismatches.is_empty() {
            Ok(pass(format!("Tor fingerprints agree for i = 0..{n}")))
        } else {
            Ok(fail(format!("Tor differs at i = {mismatches:?}")))
        }
    }))
}

// Theorem: Ext^i(L, M) specializes to Ext^i(L_alpha, M_alpha) for all
// i up to the variable count.
fn build_ext(ring: &Ring, objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let (l, m) = two_modules("ext_4_3", objs)?;
    let n = ring.nvars();
    let exts_r = ext_modules(&l, &m, n, cert)?;
    Ok(Box::new(move |alpha, cert| {
        let mut spec = Vec::with_capacity(exts_r.len());
        for e in &exts_r {
            spec.push(specialize_module(e, alpha, cert)?);
        }
        let la = specialize_module(&l, alpha, cert)?;
        let ma = specialize_module(&m, alpha, cert)?;
        let mut q = qc();
        let fresh = ext_modules(&la, &ma, n, &mut q)?;
        let mut mismatches = Vec::new();
        for i in 0..=n {
            if spec[i].fingerprint(&mut q) != fresh[i].fingerprint(&mut q) {
                mismatches.push(i);
            }
        }
        if mismatches.is_empty() {
            Ok(pass(format!("Ext fingerprints agree for i = 0..{n}")))
        } else {
            Ok(fail(format!("Ext differs at i = {mismatches:?}")))
        }
    }))
}

// Theorem: grade(I, L) is preserved.
fn build_grade(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let ring = match objs.first() {
        Some(Obj::Module(l)) => l.ring().clone(),
        _ => return Err(usage("grade_4_4", "a module file and an ideal file")),
    };
    let (l, gens) = module_and_ideal("grade_4_4", &ring, objs, cert)?;
    let grade_r = grade_on(&gens, &l, cert)?;
    Ok(Box::new(move |alpha, cert| {
        let la = specialize_module(&l, alpha, cert)?;
        let ga: Result<Vec<Poly<Rational>>> =
            gens.iter().map(|p| subst_poly(p, alpha, cert)).collect();
        let grade_a = grade_on(&ga?, &la, &mut qc())?;
        if grade_a == grade_r {
            Ok(pass(format!("grade {grade_a} = {grade_r}")))
        } else {
            Ok(fail(format!("grade changed: {grade_r} -> {grade_a}")))
        }
    }))
}

// Theorem: grade and proj.dim are preserved, hence so is perfection.
fn build_perfect(objs: Vec<Obj>, cert: &mut Certificate) -> Result<TrialFn> {
    let l = one_module("perfect_4_5", objs)?;
    let grade_r = grade_module(&l, cert)?;
    let pd_r = proj_dim(&l, cert)?;
    let perf_r = is_perfect(&l, cert)?;
    Ok(Box::new(move |alpha, cert| {
        let la = specialize_module(&l, alpha, cert)?;
        let mut q = qc();
        let grade_a = grade_module(&la, &mut q)?;
        let pd_a = proj_dim(&la, &mut q)?;
        let perf_a = is_perfect(&la, &mut q)?;
        if grade_a == grade_r && pd_a == pd_r && perf_a == perf_r {
            Ok(pass(format!(
                "grade {grade_a} = {grade_r}; proj.dim {pd_a} = {pd_r}; perfect {perf_a} = {perf_r}"
            )))
        } else {
            Ok(fail(format!(
                "grade {grade_r} -> {grade_a}; proj.dim {pd_r} -> {pd_a}; perfect {perf_r} -> {perf_a}"
            )))
        }
    }))
}
