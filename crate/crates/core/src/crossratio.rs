//! Koranyi-Reimann complex cross-ratios of boundary quadruples.
//!
//! For lifts `p_i` the cross-ratio is
//!
//! ```text
//! X(p1, p2, p3, p4) = <p3, p1> <p4, p2> / (<p4, p1> <p3, p2>)
//! ```
//!
//! Every quadruple of distinct points determines three basic cross-ratios
//! `X1 = X(p1,p2,p3,p4)`, `X2 = X(p1,p3,p2,p4)`, `X3 = X(p2,p3,p1,p4)`, and
//! these satisfy two real equations:
//!
//! ```text
//! |X2| = |X1| |X3|
//! 2 |X1|^2 Re(X3) = |X1|^2 + |X2|^2 - 2 Re(X1 + X2) + 1
//! ```
//!
//! The subset of `C^3` cut out by these is the cross-ratio variety.

use crate::error::{GeometryError, Result};
use crate::heisenberg::BoundaryPoint;
use crate::hermitian::{herm, standard_lift, Complex, GroupElement, HVector};
use crate::heisenberg::apply;
use crate::tolerance::DISTINCT_EPS;

/// Four pairwise distinct boundary points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadruple {
    points: [BoundaryPoint; 4],
}

impl Quadruple {
    /// Validates pairwise distinctness through the Hermitian form, which
    /// vanishes on a pair of null vectors exactly when they are proportional.
    pub fn new(p1: BoundaryPoint, p2: BoundaryPoint, p3: BoundaryPoint, p4: BoundaryPoint) -> Result<Self> {
        Self::from_array([p1, p2, p3, p4])
    }

    pub fn from_array(points: [BoundaryPoint; 4]) -> Result<Self> {
        let lifts = points.map(|p| standard_lift(&p));
        if lifts.iter().any(|l| !l.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let lifts = lifts.map(|l| l.normalized());
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !distinct(&lifts[i], &lifts[j]) {
                    return Err(GeometryError::DegenerateQuadruple);
                }
            }
        }
        Ok(Quadruple { points })
    }

    pub fn points(&self) -> &[BoundaryPoint; 4] {
        &self.points
    }

    pub fn p(&self, i: usize) -> &BoundaryPoint {
        &self.points[i - 1]
    }

    pub fn all_finite(&self) -> bool {
        self.points.iter().all(|p| !p.is_infinity())
    }

    /// Diagonal action of a J-unitary matrix.
    pub fn transform(&self, g: &GroupElement) -> Result<Self> {
        let mut out = self.points;
        for p in &mut out {
            *p = apply(g, p)?;
        }
        Self::from_array(out)
    }

    /// Reorders as `(p_a, p_b, p_c, p_d)` with 1-based indices.
    pub fn permuted(&self, order: [usize; 4]) -> Self {
        Quadruple { points: order.map(|i| self.points[i - 1]) }
    }
}

fn distinct(a: &HVector, b: &HVector) -> bool {
    herm(a, b).norm() > DISTINCT_EPS * a.norm() * b.norm()
}

fn cross_ratio_lifts(l1: &HVector, l2: &HVector, l3: &HVector, l4: &HVector) -> Result<Complex> {
    let den = herm(l4, l1) * herm(l3, l2);
    if den.norm() == 0.0 || !distinct(l4, l1) || !distinct(l3, l2) {
        return Err(GeometryError::DegenerateQuadruple);
    }
    Ok(herm(l3, l1) * herm(l4, l2) / den)
}

/// Complex cross-ratio of four boundary points, computed on normalized lifts.
pub fn cross_ratio(p1: &BoundaryPoint, p2: &BoundaryPoint, p3: &BoundaryPoint, p4: &BoundaryPoint) -> Result<Complex> {
    let [l1, l2, l3, l4] = [p1, p2, p3, p4].map(|p| standard_lift(p).normalized());
    cross_ratio_lifts(&l1, &l2, &l3, &l4)
}

/// Cross-ratio evaluated directly on arbitrary lifts (no normalization).
pub fn cross_ratio_of_lifts(lifts: &[HVector; 4]) -> Result<Complex> {
    cross_ratio_lifts(&lifts[0], &lifts[1], &lifts[2], &lifts[3])
}

/// The three basic cross-ratios of a quadruple and their variety residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossRatioTriple {
    pub x1: Complex,
    pub x2: Complex,
    pub x3: Complex,
    pub res1: f64,
    pub res2: f64,
}

impl CrossRatioTriple {
    pub fn from_values(x1: Complex, x2: Complex, x3: Complex) -> Self {
        let (res1, res2) = variety_residuals(x1, x2, x3);
        CrossRatioTriple { x1, x2, x3, res1, res2 }
    }

    pub fn values(&self) -> [Complex; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn max_residual(&self) -> f64 {
        self.res1.max(self.res2)
    }

    /// Membership in the cross-ratio variety: both residuals at most `tol`.
    pub fn on_variety(&self, tol: f64) -> bool {
        self.res1 <= tol && self.res2 <= tol
    }
}

pub fn triple(q: &Quadruple) -> Result<CrossRatioTriple> {
    let [l1, l2, l3, l4] = q.points.map(|p| standard_lift(&p).normalized());
    let x1 = cross_ratio_lifts(&l1, &l2, &l3, &l4)?;
    let x2 = cross_ratio_lifts(&l1, &l3, &l2, &l4)?;
    let x3 = cross_ratio_lifts(&l2, &l3, &l1, &l4)?;
    Ok(CrossRatioTriple::from_values(x1, x2, x3))
}

/// Relative residuals of the two variety equations.
///
/// Each absolute residual is divided by the largest magnitude among the
/// terms of its equation, taken as written: `|X2|`, `|X1||X3|` for the first
/// and `2|X1|^2 Re X3`, `|X1|^2`, `|X2|^2`, `2 Re(X1 + X2)`, `1` for the second.
pub fn variety_residuals(x1: Complex, x2: Complex, x3: Complex) -> (f64, f64) {
    let (a1, a2, a3) = (x1.norm(), x2.norm(), x3.norm());
    let lhs1 = a2;
    let rhs1 = a1 * a3;
    let scale1 = lhs1.max(rhs1);
    let res1 = if scale1 == 0.0 { 0.0 } else { (lhs1 - rhs1).abs() / scale1 };

    let n1 = x1.norm_sqr();
    let n2 = x2.norm_sqr();
    let lhs2 = 2.0 * n1 * x3.re;
    let mixed = 2.0 * (x1.re + x2.re);
    let rhs2 = n1 + n2 - mixed + 1.0;
    let scale2 = [lhs2.abs(), n1, n2, mixed.abs(), 1.0].into_iter().fold(0.0, f64::max);
    let res2 = (lhs2 - rhs2).abs() / scale2;
    (res1, res2)
}
