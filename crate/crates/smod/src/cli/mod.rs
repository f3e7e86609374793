//! Command-line surface. One thin binary wraps the library: individual
//! computations (gb, nf, syz, resolve, rank, minors, exact, dim,
//! specialize, tor, ext, grade, projdim) and randomized theorem
//! verification with JSON reports (verify, corpus list).
//!
//! Exit codes: 0 success, 1 a verification trial or requested
//! computation failed, 2 malformed command line or input files.

pub mod report;
pub mod verify;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::fpmod::FPModule;
use crate::groebner::ideal::{dim_ideal, gb_of_polys};
use crate::groebner::{buchberger, normal_form, syzygies, ModuleOrder};
use crate::homology::{ext, grade_module, grade_on, proj_dim, tor};
use crate::io;
use crate::resolve::{be_exactness, determinantal_ideal, rank_matrix, resolution_steps};
use crate::scalar::{rational_string, RatFun, SubstPoint};
use crate::specialize::{specialize_complex, specialize_ideal, specialize_module};

use report::{Report, TaskEcho, TrialRecord};

#[derive(Parser)]
#[command(name = "smod", version, about = "Specialization of modules over Q(u)[x]")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of an ideal or submodule
    Gb {
        #[arg(long)]
        ring: PathBuf,
        /// One generator per line; commas separate vector entries
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Normal form of an element against a generating set
    Nf {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
        /// The element, in the same comma-separated syntax
        #[arg(long)]
        vec: String,
    },
    /// Syzygies of the columns of a matrix
    Syz {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Free resolution of a module
    Resolve {
        #[arg(long)]
        module: PathBuf,
        /// Step cap; defaults to one more than the variable count
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Rank of a matrix over the fraction field
    Rank {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Reduced basis of the ideal of t x t minors
    Minors {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        size: usize,
    },
    /// Buchsbaum-Eisenbud exactness check for a free complex
    Exact {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Krull dimension of a module or of an ideal's quotient ring
    Dim {
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        ring: Option<PathBuf>,
        #[arg(long)]
        ideal: Option<PathBuf>,
    },
    /// Substitute u -> alpha in a module, ideal or complex
    Specialize {
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        complex: Option<PathBuf>,
        #[arg(long)]
        ring: Option<PathBuf>,
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Comma-separated rational coordinates
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tor_i of two modules
    Tor {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        index: usize,
    },
    /// Ext^i of two modules
    Ext {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        index: usize,
    },
    /// grade(I, L), or grade of a module when no ideal is given
    Grade {
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        ideal: Option<PathBuf>,
    },
    /// Projective dimension of a module
    Projdim {
        #[arg(long)]
        module: PathBuf,
    },
    /// Run a randomized verification campaign for one theorem
    Verify {
        #[arg(long)]
        theorem: String,
        /// Comma-separated input files
        #[arg(long)]
        inputs: String,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampling box half-width for integer alpha coordinates
        #[arg(long, default_value_t = 7)]
        bound: i64,
        /// Force this point for every trial instead of sampling; the
        /// point is allowed to be bad, failures are then expected
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corpus helpers
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List registered theorems and their committed corpus inputs
    List {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input { .. } | Error::Parse { .. } | Error::UnknownSymbol { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Gb { ring, ideal } => cmd_gb(&ring, &ideal),
        Cmd::Nf { ring, ideal, vec } => cmd_nf(&ring, &ideal, &vec),
        Cmd::Syz { ring, matrix } => cmd_syz(&ring, &matrix),
        Cmd::Resolve { module, cap } => cmd_resolve(&module, cap),
        Cmd::Rank { ring, matrix } => cmd_rank(&ring, &matrix),
        Cmd::Minors { ring, matrix, size } => cmd_minors(&ring, &matrix, size),
        Cmd::Exact { complex, out } => cmd_exact(&complex, out.as_deref()),
        Cmd::Dim { module, ring, ideal } => cmd_dim(module, ring, ideal),
        Cmd::Specialize {
            module,
            complex,
            ring,
            ideal,
            alpha,
            out,
        } => cmd_specialize(module, complex, ring, ideal, &alpha, out.as_deref()),
        Cmd::Tor { left, right, index } => cmd_tor_ext(&left, &right, index, true),
        Cmd::Ext { left, right, index } => cmd_tor_ext(&left, &right, index, false),
        Cmd::Grade { module, ideal } => cmd_grade(&module, ideal),
        Cmd::Projdim { module } => cmd_projdim(&module),
        Cmd::Verify {
            theorem,
            inputs,
            trials,
            seed,
            bound,
            alpha,
            out,
        } => cmd_verify(&theorem, &inputs, trials, seed, bound, alpha.as_deref(), out.as_deref()),
        Cmd::Corpus { cmd: CorpusCmd::List { dir } } => cmd_corpus_list(&dir),
    }
}

fn fresh_cert(ring: &crate::poly::Ring) -> Certificate {
    Certificate::new(ring.nparams())
}

fn print_cert(cert: &Certificate, ring: &crate::poly::Ring) {
    let factors = cert.factor_strings(ring.params());
    if factors.is_empty() {
        println!("certificate: empty (every alpha is good)");
    } else {
        println!("certificate factors: {}", factors.join(", "));
    }
}

fn cmd_gb(ring_path: &Path, ideal_path: &Path) -> Result<i32> {
    let ring = io::load_ring(ring_path)?;
    let gens = io::load_vectors(ideal_path, &ring, None)?;
    if gens.is_empty() {
        return Err(Error::input("no generators given"));
    }
    let rank = gens[0].len();
    let mut cert = fresh_cert(&ring);
    let gb = buchberger(
        &ring,
        rank,
        &gens,
        ModuleOrder::pot(ring.order(), rank),
        &mut cert,
    );
    for line in gb.render_lines() {
        println!("{line}");
    }
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_nf(ring_path: &Path, ideal_path: &Path, vec_text: &str) -> Result<i32> {
    let ring = io::load_ring(ring_path)?;
    let gens = io::load_vectors(ideal_path, &ring, None)?;
    if gens.is_empty() {
        return Err(Error::input("no generators given"));
    }
    let rank = gens[0].len();
    let vs = io::parse_vectors(&ring, Some(rank), vec_text)?;
    let v = match <[_; 1]>::try_from(vs) {
        Ok([v]) => v,
        Err(_) => return Err(Error::input("--vec must hold exactly one element")),
    };
    let mut cert = fresh_cert(&ring);
    let gb = buchberger(
        &ring,
        rank,
        &gens,
        ModuleOrder::pot(ring.order(), rank),
        &mut cert,
    );
    println!("{}", normal_form(&v, &gb, &mut cert).render());
    Ok(0)
}

fn cmd_syz(ring_path: &Path, matrix_path: &Path) -> Result<i32> {
    let ring = io::load_ring(ring_path)?;
    let (name, a) = io::load_matrix(matrix_path, &ring)?;
    let mut cert = fresh_cert(&ring);
    let s = syzygies(&a, &mut cert);
    print!("{}", io::render_matrix(&format!("syz_{name}"), &s));
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_resolve(module_path: &Path, cap: Option<usize>) -> Result<i32> {
    let (name, l) = io::load_module(module_path)?;
    let ring = l.ring().clone();
    let cap = cap.unwrap_or_else(|| crate::resolve::default_resolution_cap(&ring));
    let mut cert = fresh_cert(&ring);
    let (complex, complete) = resolution_steps(&l, cap, &mut cert);
    println!("resolution of {name} (complete: {complete})");
    for line in complex.render_lines() {
        println!("{line}");
    }
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_rank(ring_path: &Path, matrix_path: &Path) -> Result<i32> {
    let ring = io::load_ring(ring_path)?;
    let (_, a) = io::load_matrix(matrix_path, &ring)?;
    let mut cert = fresh_cert(&ring);
    println!("rank = {}", rank_matrix(&a, &mut cert));
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_minors(ring_path: &Path, matrix_path: &Path, size: usize) -> Result<i32> {
    if size == 0 {
        return Err(Error::input("minor size must be at least 1"));
    }
    let ring = io::load_ring(ring_path)?;
    let (_, a) = io::load_matrix(matrix_path, &ring)?;
    let mut cert = fresh_cert(&ring);
    let gb = determinantal_ideal(&a, size, &mut cert);
    for line in gb.render_lines() {
        println!("{line}");
    }
    Ok(0)
}

fn cmd_exact(complex_path: &Path, out: Option<&Path>) -> Result<i32> {
    let (name, c) = io::load_complex(complex_path)?;
    let ring = c.ring().clone();
    let mut cert = fresh_cert(&ring);
    let rep = be_exactness(&c, &mut cert);
    let mut lines = vec![format!("complex {name}: exact = {}", rep.overall)];
    lines.extend(rep.render_lines());
    for line in &lines {
        println!("{line}");
    }
    print_cert(&cert, &ring);
    if let Some(path) = out {
        let mut report = Report::new(TaskEcho {
            command: "exact".into(),
            theorem: None,
            inputs: vec![complex_path.display().to_string()],
            trials: 1,
            seed: 0,
            bound: 0,
        });
        report.push(TrialRecord {
            alpha: Vec::new(),
            pass: rep.overall,
            detail: lines.join("\n"),
            cert_factors: cert.factor_strings(ring.params()),
            ms: 0,
        });
        report.write(path)?;
    }
    Ok(if rep.overall { 0 } else { 1 })
}

fn cmd_dim(
    module: Option<PathBuf>,
    ring: Option<PathBuf>,
    ideal: Option<PathBuf>,
) -> Result<i32> {
    match (module, ring, ideal) {
        (Some(mpath), None, None) => {
            let (_, l) = io::load_module(&mpath)?;
            let ring = l.ring().clone();
            let mut cert = fresh_cert(&ring);
            let d = if l.is_zero(&mut cert) {
                -1
            } else {
                dim_ideal(&l.annihilator(&mut cert))
            };
            println!("dim = {d}");
            print_cert(&cert, &ring);
        }
        (None, Some(rpath), Some(ipath)) => {
            let ring = io::load_ring(&rpath)?;
            let gens = io::load_ideal(&ipath, &ring)?;
            let mut cert = fresh_cert(&ring);
            let gb = gb_of_polys(&ring, &gens, &mut cert);
            println!("dim = {}", dim_ideal(&gb));
            print_cert(&cert, &ring);
        }
        _ => {
            return Err(Error::input(
                "dim needs either --module, or --ring and --ideal",
            ))
        }
    }
    Ok(0)
}

fn cmd_specialize(
    module: Option<PathBuf>,
    complex: Option<PathBuf>,
    ring: Option<PathBuf>,
    ideal: Option<PathBuf>,
    alpha_text: &str,
    out: Option<&Path>,
) -> Result<i32> {
    let (input_path, lines, cert, ring) = match (module, complex, ring, ideal) {
        (Some(mpath), None, None, None) => {
            let (name, l) = io::load_module(&mpath)?;
            let ring = l.ring().clone();
            let alpha = SubstPoint::parse(alpha_text, ring.nparams())?;
            let mut cert = fresh_cert(&ring);
            let la = specialize_module(&l, &alpha, &mut cert)?;
            let mut lines = vec![format!(
                "module {name}_alpha gens {} (alpha = {alpha})",
                la.gens()
            )];
            for j in 0..la.presentation().cols() {
                lines.push(la.presentation().col(j).render());
            }
            (mpath, lines, cert, ring)
        }
        (None, Some(cpath), None, None) => {
            let (name, c) = io::load_complex(&cpath)?;
            let ring = c.ring().clone();
            let alpha = SubstPoint::parse(alpha_text, ring.nparams())?;
            let mut cert = fresh_cert(&ring);
            let ca = specialize_complex(&c, &alpha, &mut cert)?;
            let mut lines = vec![format!("complex {name}_alpha (alpha = {alpha})")];
            lines.extend(ca.render_lines());
            (cpath, lines, cert, ring)
        }
        (None, None, Some(rpath), Some(ipath)) => {
            let ring = io::load_ring(&rpath)?;
            let gens = io::load_ideal(&ipath, &ring)?;
            let alpha = SubstPoint::parse(alpha_text, ring.nparams())?;
            let mut cert = fresh_cert(&ring);
            let gb = specialize_ideal(&gens, &alpha, &mut cert)?;
            let mut lines = vec![format!("ideal basis at alpha = {alpha}")];
            lines.extend(gb.render_lines());
            (ipath, lines, cert, ring)
        }
        _ => {
            return Err(Error::input(
                "specialize needs --module, --complex, or --ring and --ideal",
            ))
        }
    };
    let mut lines = lines;
    let alpha = SubstPoint::parse(alpha_text, ring.nparams())?;
    if !cert.is_good(&alpha) {
        // substitution itself went through, but preservation theorems
        // make no promise at this point; say so instead of implying one
        lines.push(
            "note: alpha lies on the excluded locus of the certificate; \
             computed invariants need not match their specializations"
                .to_string(),
        );
    }
    for line in &lines {
        println!("{line}");
    }
    print_cert(&cert, &ring);
    if let Some(path) = out {
        let mut report = Report::new(TaskEcho {
            command: "specialize".into(),
            theorem: None,
            inputs: vec![input_path.display().to_string()],
            trials: 1,
            seed: 0,
            bound: 0,
        });
        report.push(TrialRecord {
            alpha: alpha.values().iter().map(rational_string).collect(),
            pass: true,
            detail: lines.join("\n"),
            cert_factors: cert.factor_strings(ring.params()),
            ms: 0,
        });
        report.write(path)?;
    }
    Ok(0)
}

fn load_pair(left: &Path, right: &Path) -> Result<(FPModule<RatFun>, FPModule<RatFun>)> {
    let (_, l) = io::load_module(left)?;
    let (_, m) = io::load_module(right)?;
    if l.ring() != m.ring() {
        return Err(Error::RingMismatch);
    }
    Ok((l, m))
}

fn cmd_tor_ext(left: &Path, right: &Path, index: usize, is_tor: bool) -> Result<i32> {
    let (l, m) = load_pair(left, right)?;
    let ring = l.ring().clone();
    let mut cert = fresh_cert(&ring);
    let result = if is_tor {
        tor(&l, &m, index, &mut cert)?
    } else {
        ext(&l, &m, index, &mut cert)?
    };
    let kind = if is_tor { "Tor" } else { "Ext" };
    println!(
        "{kind}_{index}: {} generators, {} relations",
        result.gens(),
        result.presentation().cols()
    );
    for line in result.fingerprint(&mut cert).render_lines() {
        println!("{line}");
    }
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_grade(module_path: &Path, ideal: Option<PathBuf>) -> Result<i32> {
    let (_, l) = io::load_module(module_path)?;
    let ring = l.ring().clone();
    let mut cert = fresh_cert(&ring);
    match ideal {
        Some(ipath) => {
            let gens = io::load_ideal(&ipath, &ring)?;
            println!("grade = {}", grade_on(&gens, &l, &mut cert)?);
        }
        None => println!("grade = {}", grade_module(&l, &mut cert)?),
    }
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_projdim(module_path: &Path) -> Result<i32> {
    let (_, l) = io::load_module(module_path)?;
    let ring = l.ring().clone();
    let mut cert = fresh_cert(&ring);
    println!("proj.dim = {}", proj_dim(&l, &mut cert)?);
    print_cert(&cert, &ring);
    Ok(0)
}

fn cmd_verify(
    theorem: &str,
    inputs: &str,
    trials: usize,
    seed: u64,
    bound: i64,
    alpha: Option<&str>,
    out: Option<&Path>,
) -> Result<i32> {
    let paths: Vec<PathBuf> = inputs
        .split(',')
        .map(|s| PathBuf::from(s.trim()))
        .filter(|p| !p.as_os_str().is_empty())
        .collect();
    if paths.is_empty() {
        return Err(Error::input("--inputs lists no files"));
    }
    let report = verify::run_verification(theorem, &paths, trials, seed, bound, alpha)?;
    println!("verify {theorem}: {trials} trials, seed {seed}, bound {bound}");
    for (t, trial) in report.trials.iter().enumerate() {
        println!(
            "trial {:>2} alpha=({}) {} {}",
            t + 1,
            trial.alpha.join(","),
            if trial.pass { "pass" } else { "FAIL" },
            trial.detail
        );
    }
    println!(
        "summary: {} passed, {} failed",
        report.summary.pass, report.summary.fail
    );
    if let Some(path) = out {
        report.write(path)?;
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn cmd_corpus_list(dir: &Path) -> Result<i32> {
    for task in verify::REGISTRY {
        println!("{}  {}", task.theorem, task.blurb);
        for input in task.inputs {
            let path = dir.join(input);
            let mark = if path.is_file() { "ok" } else { "missing" };
            println!("    {input} [{mark}]");
        }
    }
    Ok(0)
}
