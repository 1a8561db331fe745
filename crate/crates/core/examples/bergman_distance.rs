//! Bergman distance between interior points of the Siegel domain.

use chyp::bergman::{bergman_distance, InteriorPoint};
use chyp::heisenberg::inversion;
use chyp::Complex;

fn main() -> chyp::Result<()> {
    let z = InteriorPoint::new(Complex::new(-1.0, 0.0), Complex::new(0.0, 0.0))?;
    let w = InteriorPoint::new(Complex::new(-2.0, 0.0), Complex::new(0.0, 0.0))?;
    let rho = bergman_distance(&z, &w)?;
    println!("rho = {rho} (ln 2 = {})", std::f64::consts::LN_2);

    let j = inversion();
    println!("after inversion: {}", bergman_distance(&z.transform(&j)?, &w.transform(&j)?)?);

    match InteriorPoint::new(Complex::new(-0.5, 0.0), Complex::new(1.0, 0.0)) {
        Ok(_) => println!("unexpectedly interior"),
        Err(e) => println!("(-0.5, 1) rejected: {e}"),
    }
    Ok(())
}
