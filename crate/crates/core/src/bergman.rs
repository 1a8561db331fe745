//! Bergman distance on the Siegel domain `{ 2 Re(z1) + |z2|^2 < 0 }`.
//!
//! With standard lifts `(z1, z2, 1)`,
//! `cosh^2(rho / 2) = |<z, w>|^2 / (<z, z> <w, w>)`.

use crate::error::{GeometryError, Result};
use crate::hermitian::{herm, Complex, GroupElement, HVector};

/// Allowed roundoff below 1 in the cosh^2 quotient before it is an error.
const QUOTIENT_SLACK: f64 = 1e-12;

/// A point of the Siegel domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteriorPoint {
    z1: Complex,
    z2: Complex,
}

impl InteriorPoint {
    pub fn new(z1: Complex, z2: Complex) -> Result<Self> {
        let finite = [z1.re, z1.im, z2.re, z2.im].iter().all(|v| v.is_finite());
        if !finite || 2.0 * z1.re + z2.norm_sqr() >= 0.0 {
            return Err(GeometryError::NotInterior);
        }
        Ok(InteriorPoint { z1, z2 })
    }

    pub fn z1(&self) -> Complex {
        self.z1
    }

    pub fn z2(&self) -> Complex {
        self.z2
    }

    pub fn lift(&self) -> HVector {
        HVector::new(self.z1, self.z2, Complex::new(1.0, 0.0))
    }

    /// Image under a matrix acting on lifts.
    pub fn transform(&self, g: &GroupElement) -> Result<Self> {
        let [v1, v2, v3] = g.apply_vec(&self.lift()).0;
        if v3.norm() == 0.0 {
            return Err(GeometryError::NotInterior);
        }
        InteriorPoint::new(v1 / v3, v2 / v3)
    }
}

pub fn bergman_distance(z: &InteriorPoint, w: &InteriorPoint) -> Result<f64> {
    let (lz, lw) = (z.lift(), w.lift());
    let nz = -herm(&lz, &lz).re;
    let nw = -herm(&lw, &lw).re;
    let q = herm(&lz, &lw).norm_sqr() / (nz * nw);
    if q.is_nan() || q < 1.0 - QUOTIENT_SLACK {
        return Err(GeometryError::NotInterior);
    }
    Ok(2.0 * q.max(1.0).sqrt().acosh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{inversion, similarity_matrix, Similarity};

    fn pt(a: f64, b: f64, c: f64, d: f64) -> InteriorPoint {
        InteriorPoint::new(Complex::new(a, b), Complex::new(c, d)).unwrap()
    }

    #[test]
    fn golden_pair() {
        let rho = bergman_distance(&pt(-1.0, 0.0, 0.0, 0.0), &pt(-2.0, 0.0, 0.0, 0.0)).unwrap();
        assert!((rho - std::f64::consts::LN_2).abs() < 1e-12, "{rho}");
    }

    #[test]
    fn zero_and_symmetric() {
        let z = pt(-1.5, 0.3, 0.4, -0.2);
        let w = pt(-0.7, -1.1, -0.5, 0.6);
        assert_eq!(bergman_distance(&z, &z).unwrap(), 0.0);
        let a = bergman_distance(&z, &w).unwrap();
        let b = bergman_distance(&w, &z).unwrap();
        assert!(a > 0.0);
        assert!((a - b).abs() <= 1e-14 * a);
    }

    #[test]
    fn rejects_boundary_and_exterior() {
        assert_eq!(
            InteriorPoint::new(Complex::new(-0.5, 0.0), Complex::new(1.0, 0.0)),
            Err(GeometryError::NotInterior)
        );
        assert_eq!(
            InteriorPoint::new(Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)),
            Err(GeometryError::NotInterior)
        );
    }

    #[test]
    fn isometries_preserve_distance() {
        let z = pt(-1.5, 0.3, 0.4, -0.2);
        let w = pt(-0.7, -1.1, -0.5, 0.6);
        let d = bergman_distance(&z, &w).unwrap();
        let sim = Similarity { r: 2.5, phi: 1.1, zeta: Complex::new(0.3, -0.8), s: 1.7 };
        for g in [similarity_matrix(&sim).unwrap(), inversion()] {
            let (gz, gw) = (z.transform(&g).unwrap(), w.transform(&g).unwrap());
            let dg = bergman_distance(&gz, &gw).unwrap();
            assert!((dg - d).abs() <= 1e-10 * d, "{d} vs {dg}");
        }
    }
}
