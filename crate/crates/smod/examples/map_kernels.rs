// Kernel, image and cokernel of a module map commute with substitution.
// The map here is (a, b) |-> a*u1*x1 + b*x2 from R^2 to R; its kernel is
// the syzygy line, its cokernel the fat point R/(u1*x1, x2).

use smod::cert::Certificate;
use smod::io;
use smod::scalar::SubstPoint;
use smod::specialize::{specialize_gb, specialize_map};

fn corpus(rel: &str) -> String {
    format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> smod::Result<()> {
    let mut cert = Certificate::new(1);
    let (name, v) = io::load_map(corpus("maps/mul_ux1.map").as_ref(), &mut cert)?;
    let ring = v.source().ring().clone();

    let ker = v.kernel(&mut cert).canonical_gb(&mut cert);
    println!("ker {name}:");
    for line in ker.render_lines() {
        println!("  {line}");
    }
    let coker = v.cokernel();
    println!("coker {name}: {} generators, fingerprint:", coker.gens());
    for line in coker.fingerprint(&mut cert).render_lines() {
        println!("  {line}");
    }

    // specialize the map, recompute the kernel over Q, compare with the
    // substituted parametric kernel: same reduced basis, exactly
    let alpha = SubstPoint::parse("5", ring.nparams())?;
    let va = specialize_map(&v, &alpha, &mut cert)?;
    let mut qcert = Certificate::new(0);
    let ker_fresh = va.kernel(&mut qcert).canonical_gb(&mut qcert);
    let ker_subst = specialize_gb(&ker, &alpha, &mut cert)?;
    assert_eq!(ker_subst, ker_fresh.gens().to_vec());
    println!("alpha = 5: substituted kernel basis = recomputed kernel basis");
    Ok(())
}
