// Certificates make "for almost all alpha" effective: every inverted
// parameter value is recorded, good points are sampled outside the
// recorded zero set, and bad points are refused up front.

use smod::cert::Certificate;
use smod::io;
use smod::scalar::SubstPoint;
use smod::specialize::{require_good, sample_alpha};

fn corpus(rel: &str) -> String {
    format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> smod::Result<()> {
    let (_, l) = io::load_module(corpus("modules/cyc_ux1.mod").as_ref())?;
    let ring = l.ring().clone();
    let mut cert = Certificate::new(ring.nparams());

    // dimension of coker [u1*x1] forces a division by u1 somewhere
    let ann = l.annihilator(&mut cert);
    println!("Ann = ({})", ann.render_lines().join(", "));
    println!("certificate factors: {:?}", cert.factor_strings(ring.params()));

    // sampling respects the certificate and is reproducible by seed
    for seed in 0..4 {
        let alpha = sample_alpha(seed, &cert, 7)?;
        assert!(cert.is_good(&alpha));
        println!("seed {seed} samples alpha = {alpha}");
    }

    // alpha = 0 lies on the zero set of u1, so the gate refuses it
    let bad = SubstPoint::parse("0", ring.nparams())?;
    assert!(!cert.is_good(&bad));
    let err = require_good(&cert, &bad, &ring).unwrap_err();
    println!("alpha = 0: {err}");
    Ok(())
}
