// Sum, intersection, quotient, colon and product of submodules, and how
// each one commutes with substitution of the parameter.

use smod::cert::Certificate;
use smod::fpmod::{colon_and_product, Submodule};
use smod::io;
use smod::scalar::SubstPoint;
use smod::specialize::{specialize_module, specialize_submodule};

fn corpus(rel: &str) -> String {
    format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> smod::Result<()> {
    let (_, free2) = io::load_module(corpus("modules/free2.mod").as_ref())?;
    let ring = free2.ring().clone();
    let mut cert = Certificate::new(ring.nparams());

    let u_gens = io::load_vectors(corpus("vectors/diag_u.vec").as_ref(), &ring, Some(2))?;
    let v_gens = io::load_vectors(corpus("vectors/skew.vec").as_ref(), &ring, Some(2))?;
    let u = Submodule::new(free2.clone(), u_gens);
    let v = Submodule::new(free2.clone(), v_gens);

    let sum = u.sum(&v)?;
    let meet = u.intersect(&v, &mut cert)?;
    println!("basis of U + V:");
    for line in sum.canonical_gb(&mut cert).render_lines() {
        println!("  {line}");
    }
    println!("basis of U intersect V:");
    for line in meet.canonical_gb(&mut cert).render_lines() {
        println!("  {line}");
    }

    // colon and product against an ideal, on a cyclic torsion module
    let (_, l) = io::load_module(corpus("modules/cyc_prod.mod").as_ref())?;
    let j = io::load_ideal(corpus("ideals/colon_probe.id").as_ref(), &ring)?;
    let (colon, product) = colon_and_product(&l, &j, &mut cert);
    println!("(0 : x1) in R/(u1*x1*x2):");
    for line in colon.canonical_gb(&mut cert).render_lines() {
        println!("  {line}");
    }
    println!("x1 * (R/(u1*x1*x2)):");
    for line in product.canonical_gb(&mut cert).render_lines() {
        println!("  {line}");
    }

    // the quotient (free2 / U) specializes to the quotient of the
    // specializations; compare fingerprints at a sampled point
    let alpha = SubstPoint::parse("7", ring.nparams())?;
    let quot_spec = specialize_module(&u.quotient_module(), &alpha, &mut cert)?;
    let ua = specialize_submodule(&u, &alpha, &mut cert)?;
    let mut qcert = Certificate::new(0);
    assert_eq!(
        quot_spec.fingerprint(&mut qcert),
        ua.quotient_module().fingerprint(&mut qcert)
    );
    println!("quotient fingerprints agree at alpha = 7");
    Ok(())
}
