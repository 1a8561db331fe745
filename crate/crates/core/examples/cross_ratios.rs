//! Complex cross-ratios of a boundary quadruple, their variety residuals,
//! and invariance under a random J-unitary matrix.

use chyp::crossratio::{triple, Quadruple};
use chyp::heisenberg::BoundaryPoint;
use chyp::hermitian::j_unitary_defect;
use chyp::sampling::{random_junitary, SampleRng};
use chyp::Complex;

fn main() -> chyp::Result<()> {
    let q = Quadruple::new(
        BoundaryPoint::finite(Complex::new(0.2, -0.4), 1.0),
        BoundaryPoint::finite(Complex::new(-1.0, 0.3), -0.5),
        BoundaryPoint::finite(Complex::new(0.7, 0.9), 0.25),
        BoundaryPoint::Infinity,
    )?;
    let t = triple(&q)?;
    println!("X1 = {:.6}\nX2 = {:.6}\nX3 = {:.6}", t.x1, t.x2, t.x3);
    println!("residuals: {:.2e} {:.2e}", t.res1, t.res2);

    let mut rng = SampleRng::new(2024, 0);
    let g = random_junitary(&mut rng, 4);
    println!("twist defect |G*JG - J| = {:.2e}", j_unitary_defect(&g));
    let moved = triple(&q.transform(&g)?)?;
    for (a, b) in t.values().iter().zip(moved.values()) {
        println!("  |X - X'| / |X| = {:.2e}", (a - b).norm() / a.norm());
    }
    Ok(())
}
