// Homology of a free complex that is not exact, and its stability under
// substitution. H1 of the corpus complex `halfway` is a shifted copy of
// R/(x2), so every specialization keeps a one-dimensional H1.

use smod::cert::Certificate;
use smod::fpmod::{FPModule, ModuleMap};
use smod::io;
use smod::resolve::complex_homology;
use smod::scalar::SubstPoint;
use smod::specialize::{specialize_complex, specialize_module};

fn corpus(rel: &str) -> String {
    format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> smod::Result<()> {
    let (name, c) = io::load_complex(corpus("complexes/halfway.cx").as_ref())?;
    let ring = c.ring().clone();
    let mut cert = Certificate::new(ring.nparams());

    // view the free complex as a chain of module maps and take homology
    let modules: Vec<FPModule<_>> = c.ranks().iter().map(|&r| FPModule::free(&ring, r)).collect();
    let maps: Vec<ModuleMap<_>> = (1..=c.length())
        .map(|i| ModuleMap::lift_map(c.phi(i).clone(), &modules[i], &modules[i - 1], &mut cert))
        .collect::<smod::Result<_>>()?;
    let h = complex_homology(&maps, &mut cert)?;
    for (i, hi) in h.iter().enumerate() {
        println!("H_{i}({name}): {} generators, dim {}", hi.gens(), hi.fingerprint(&mut cert).dim());
    }

    // homology commutes with substitution, degree by degree
    let alpha = SubstPoint::parse("2", ring.nparams())?;
    let ca = specialize_complex(&c, &alpha, &mut cert)?;
    let qring = ca.ring().clone();
    let mut qcert = Certificate::new(0);
    let qmodules: Vec<FPModule<_>> =
        ca.ranks().iter().map(|&r| FPModule::free(&qring, r)).collect();
    let qmaps: Vec<ModuleMap<_>> = (1..=ca.length())
        .map(|i| ModuleMap::lift_map(ca.phi(i).clone(), &qmodules[i], &qmodules[i - 1], &mut qcert))
        .collect::<smod::Result<_>>()?;
    let h_fresh = complex_homology(&qmaps, &mut qcert)?;
    for i in 0..h.len() {
        let hi_spec = specialize_module(&h[i], &alpha, &mut cert)?;
        assert_eq!(
            hi_spec.fingerprint(&mut qcert),
            h_fresh[i].fingerprint(&mut qcert),
            "H_{i} fingerprints at alpha = 2"
        );
    }
    println!("homology fingerprints agree at alpha = 2 in every degree");
    Ok(())
}
