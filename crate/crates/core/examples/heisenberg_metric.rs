//! Koranyi-Cygan distances on the Heisenberg group, computed from coordinates
//! and from the Hermitian form, plus the effect of similarities.

use chyp::heisenberg::{dk, dk_via_form, gauge, group_mul, BoundaryPoint, HeisPoint, Similarity};
use chyp::Complex;

fn main() -> chyp::Result<()> {
    let p = HeisPoint::new(Complex::new(1.0, 0.0), 0.0);
    let q = HeisPoint::new(Complex::new(0.0, 1.0), 2.0);
    println!("p = {p}, q = {q}");
    println!("p * q = {}", group_mul(&p, &q));
    println!("gauge(p) = {}", gauge(&p));

    let (bp, bq) = (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q));
    println!("dk(p, q)          = {}", dk(&bp, &bq)?);
    println!("dk_via_form(p, q) = {}", dk_via_form(&bp, &bq)?);

    let sim = Similarity { r: 3.0, phi: 0.7, zeta: Complex::new(-0.5, 1.5), s: 0.25 };
    let (sp, sq) = (sim.act(&p), sim.act(&q));
    println!("after similarity with r = 3: dk = {}", dk(&sp.into(), &sq.into())?);

    match dk(&bp, &BoundaryPoint::Infinity) {
        Ok(d) => println!("dk to infinity = {d}"),
        Err(e) => println!("dk to infinity: {e}"),
    }
    Ok(())
}
