// Substitution u -> alpha commutes with Groebner bases: specializing the
// parametric reduced basis gives the reduced basis of the specialized
// ideal, at every substitution point the certificate admits.

use smod::cert::Certificate;
use smod::io;
use smod::scalar::SubstPoint;
use smod::specialize::{specialize_gb, specialize_ideal};

fn corpus(rel: &str) -> String {
    format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> smod::Result<()> {
    let ring = io::load_ring(corpus("rings/one_param.ring").as_ref())?;
    let gens = io::load_ideal(corpus("ideals/mixed_u.id").as_ref(), &ring)?;

    let mut cert = Certificate::new(ring.nparams());
    let gb = smod::groebner::ideal::gb_of_polys(&ring, &gens, &mut cert);
    println!("parametric basis:");
    for line in gb.render_lines() {
        println!("  {line}");
    }
    println!("excluded parameter values: zeros of {:?}", cert.factor_strings(ring.params()));

    for text in ["2", "-1", "1/3"] {
        let alpha = SubstPoint::parse(text, ring.nparams())?;
        // route A: substitute into the parametric basis
        let direct = specialize_gb(&gb, &alpha, &mut cert)?;
        // route B: substitute into the generators, then reduce over Q
        let recomputed = specialize_ideal(&gens, &alpha, &mut cert)?;
        assert_eq!(direct, recomputed.gens().to_vec());
        println!("alpha = {text}: bases agree, {} elements", direct.len());
    }

    // a point on the excluded locus is refused, not silently mangled
    let bad = SubstPoint::parse("0", ring.nparams())?;
    let err = specialize_gb(&gb, &bad, &mut cert).unwrap_err();
    println!("alpha = 0 is rejected: {err}");
    Ok(())
}
