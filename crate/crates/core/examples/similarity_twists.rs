//! Similarity matrices, the inversion, and random twist words.

use chyp::heisenberg::{apply, inversion, inversion_coords, similarity_matrix, BoundaryPoint, HeisPoint, Similarity};
use chyp::hermitian::{is_j_unitary, j_unitary_defect};
use chyp::sampling::{random_junitary, SampleRng};
use chyp::tolerance::DEFAULT_REL_TOL;
use chyp::Complex;

fn main() -> chyp::Result<()> {
    let sim = Similarity { r: 2.0, phi: 0.5, zeta: Complex::new(0.3, -1.2), s: 0.8 };
    let g = similarity_matrix(&sim)?;
    println!("similarity J-unitary: {} (defect {:.1e})", is_j_unitary(&g, DEFAULT_REL_TOL), j_unitary_defect(&g));

    let p = HeisPoint::new(Complex::new(0.5, 0.5), -1.0);
    println!("coordinates: {}", sim.act(&p));
    println!("matrix:      {:?}", apply(&g, &BoundaryPoint::Finite(p))?);

    let j = inversion();
    println!("inversion of p: {:?}", apply(&j, &BoundaryPoint::Finite(p))?);
    println!("closed form:    {:?}", inversion_coords(&p));
    println!("inversion of origin: {:?}", apply(&j, &BoundaryPoint::origin())?);

    let mut rng = SampleRng::new(1, 0);
    for depth in [1, 3, 6] {
        let w = random_junitary(&mut rng, depth);
        println!("twist depth {depth}: defect {:.2e}", j_unitary_defect(&w));
    }
    Ok(())
}
