// Free resolutions and the rank/depth exactness test. The module is the
// complete intersection R/(x1 - u1, x2^2); its resolution is the length-2
// Koszul complex, and the exactness report certifies it step by step.

use smod::cert::Certificate;
use smod::fpmod::FPModule;
use smod::poly::{parse_poly, MonomialOrder, RingData};
use smod::resolve::{be_exactness, default_resolution_cap, free_resolution};
use smod::scalar::RatFun;

fn main() -> smod::Result<()> {
    let ring = RingData::parametric(&["u1"], &["x1", "x2"], MonomialOrder::GrevLex);
    let rels = [
        parse_poly::<RatFun>(&ring, "x1 - u1")?,
        parse_poly::<RatFun>(&ring, "x2^2")?,
    ];
    let l = FPModule::cyclic(&ring, &rels);

    let mut cert = Certificate::new(ring.nparams());
    let complex = free_resolution(&l, default_resolution_cap(&ring), &mut cert)?;
    println!("resolution of R/(x1 - u1, x2^2):");
    for line in complex.render_lines() {
        println!("  {line}");
    }

    let report = be_exactness(&complex, &mut cert);
    println!("exactness report:");
    for line in report.render_lines() {
        println!("  {line}");
    }
    assert!(report.overall, "a resolution is exact in positive degrees");
    Ok(())
}
