//! The Ptolemaean inequality on R-circles, chains and generic quadruples.

use chyp::crossratio::Quadruple;
use chyp::heisenberg::{c_circle_point, r_circle_point};
use chyp::ptolemy::{verify, verify_metric};
use chyp::tolerance::EQ_TOL;

fn main() -> chyp::Result<()> {
    let line = Quadruple::from_array([0.0, 1.0, 2.0, 3.0].map(r_circle_point))?;
    for (name, order) in [("0,1,2,3", [1, 2, 3, 4]), ("0,2,1,3", [1, 3, 2, 4]), ("0,1,3,2", [1, 2, 4, 3])] {
        let r = verify(&line.permuted(order), EQ_TOL)?;
        println!("R-circle {name}: s1 = {:.6} s2 = {:.6} -> {}", r.s1, r.s2, r.equality_case);
    }
    println!("metric slacks of 0,1,2,3: {:?}", verify_metric(&line)?);

    let chain = Quadruple::new(
        c_circle_point(1.0, 0.0, 0.0)?,
        c_circle_point(1.0, 0.0, 1.5)?,
        c_circle_point(1.0, 0.0, 3.0)?,
        c_circle_point(1.0, 0.0, 4.5)?,
    )?;
    let r = verify(&chain, EQ_TOL)?;
    println!("chain: slacks {:?} -> {} (R-circle: {})", r.slacks(), r.equality_case, r.r_circle);
    Ok(())
}
