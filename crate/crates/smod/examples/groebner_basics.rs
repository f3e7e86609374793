// Reduced Groebner bases over Q(u1)[x1,x2]: build a ring, parse an
// ideal, reduce it, and look at what the certificate had to invert.

use smod::cert::Certificate;
use smod::groebner::ideal::gb_of_polys;
use smod::groebner::normal_form;
use smod::poly::{parse_poly, MonomialOrder, Poly, RingData, VecPoly};
use smod::scalar::RatFun;

fn main() -> smod::Result<()> {
    let ring = RingData::parametric(&["u1"], &["x1", "x2"], MonomialOrder::GrevLex);
    let gens: Vec<Poly<RatFun>> = ["u1*x1^2 + x2", "x1*x2 - u1"]
        .iter()
        .map(|s| parse_poly(&ring, s))
        .collect::<smod::Result<_>>()?;

    let mut cert = Certificate::new(ring.nparams());
    let gb = gb_of_polys(&ring, &gens, &mut cert);

    println!("reduced Groebner basis:");
    for line in gb.render_lines() {
        println!("  {line}");
    }

    // normal forms against the basis are canonical representatives
    let f: Poly<RatFun> = parse_poly(&ring, "x1^2*x2 + x1")?;
    let v = VecPoly::from_entries(&ring, vec![f]);
    println!("NF(x1^2*x2 + x1) = {}", normal_form(&v, &gb, &mut cert).render());

    // the run inverted these parameter polynomials; substitution points
    // that keep them nonzero replay the computation verbatim over Q
    println!("certificate factors: {:?}", cert.factor_strings(ring.params()));
    Ok(())
}
