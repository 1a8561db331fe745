//! The Heisenberg group `C x R`, the Koranyi gauge and the Koranyi-Cygan
//! metric, together with the matrices realizing Heisenberg similarities and
//! the inversion swapping the origin and infinity.
//!
//! Group law: `(z, t) * (w, s) = (z + w, t + s + 2 Im(conj(w) z))`.

use std::fmt;

use crate::error::{GeometryError, Result};
use crate::hermitian::{herm, project_with, standard_lift, Complex, GroupElement};
use crate::tolerance::{ACTION_TOL, ACTION_INF_TOL};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// A finite boundary point `(z, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisPoint {
    pub z: Complex,
    pub t: f64,
}

impl HeisPoint {
    pub const fn new(z: Complex, t: f64) -> Self {
        HeisPoint { z, t }
    }

    pub const fn identity() -> Self {
        HeisPoint::new(Complex::new(0.0, 0.0), 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.z.re.is_finite() && self.z.im.is_finite() && self.t.is_finite()
    }
}

impl fmt::Display for HeisPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.z, self.t)
    }
}

/// A point of the boundary sphere: a Heisenberg point or infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(HeisPoint),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(z: Complex, t: f64) -> Self {
        BoundaryPoint::Finite(HeisPoint::new(z, t))
    }

    pub fn origin() -> Self {
        BoundaryPoint::Finite(HeisPoint::identity())
    }

    pub fn as_finite(&self) -> Option<&HeisPoint> {
        match self {
            BoundaryPoint::Finite(p) => Some(p),
            BoundaryPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }
}

impl From<HeisPoint> for BoundaryPoint {
    fn from(p: HeisPoint) -> Self {
        BoundaryPoint::Finite(p)
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(p) => p.fmt(f),
            BoundaryPoint::Infinity => f.write_str("inf"),
        }
    }
}

pub fn group_mul(p: &HeisPoint, q: &HeisPoint) -> HeisPoint {
    HeisPoint::new(p.z + q.z, p.t + q.t + 2.0 * (q.z.conj() * p.z).im)
}

pub fn group_inv(p: &HeisPoint) -> HeisPoint {
    HeisPoint::new(-p.z, -p.t)
}

/// Koranyi gauge `| |z|^2 - it |^{1/2}`.
pub fn gauge(p: &HeisPoint) -> f64 {
    Complex::new(p.z.norm_sqr(), -p.t).norm().sqrt()
}

fn finite_pair<'a>(p: &'a BoundaryPoint, q: &'a BoundaryPoint) -> Result<(&'a HeisPoint, &'a HeisPoint)> {
    match (p, q) {
        (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => Ok((a, b)),
        _ => Err(GeometryError::MetricAtInfinity),
    }
}

/// Koranyi-Cygan distance from the explicit Heisenberg formula.
pub fn dk(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<f64> {
    let (a, b) = finite_pair(p, q)?;
    Ok(dk_finite(a, b))
}

pub fn dk_finite(a: &HeisPoint, b: &HeisPoint) -> f64 {
    let dz = a.z - b.z;
    let w = Complex::new(dz.norm_sqr(), -a.t + b.t - 2.0 * (a.z * b.z.conj()).im);
    w.norm().sqrt()
}

/// Koranyi-Cygan distance as `|<lift p, lift q>|^{1/2}`.
///
/// Rounded lifts are only null up to a few ulps, so a form value below
/// `4 eps |lift p| |lift q|` is indistinguishable from zero and is returned
/// as a zero distance.
pub fn dk_via_form(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<f64> {
    finite_pair(p, q)?;
    let (lp, lq) = (standard_lift(p), standard_lift(q));
    let h = herm(&lp, &lq).norm();
    if h <= 4.0 * f64::EPSILON * lp.norm() * lq.norm() {
        return Ok(0.0);
    }
    Ok(h.sqrt())
}

/// A Heisenberg similarity: `(z, t) -> (zeta, s) * (r e^{i phi} z, r^2 t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    pub r: f64,
    pub phi: f64,
    pub zeta: Complex,
    pub s: f64,
}

impl Similarity {
    pub fn identity() -> Self {
        Similarity { r: 1.0, phi: 0.0, zeta: Complex::new(0.0, 0.0), s: 0.0 }
    }

    pub fn translation(zeta: Complex, s: f64) -> Self {
        Similarity { zeta, s, ..Self::identity() }
    }

    pub fn rotation(phi: f64) -> Self {
        Similarity { phi, ..Self::identity() }
    }

    pub fn dilation(r: f64) -> Self {
        Similarity { r, ..Self::identity() }
    }

    /// Image of a finite point, computed in Heisenberg coordinates.
    pub fn act(&self, p: &HeisPoint) -> HeisPoint {
        let inner = HeisPoint::new(self.r * Complex::from_polar(1.0, self.phi) * p.z, self.r * self.r * p.t);
        group_mul(&HeisPoint::new(self.zeta, self.s), &inner)
    }
}

/// Matrix of a similarity acting on lifts.
///
/// The isometry part is
///
/// ```text
/// | 1  -sqrt(2) conj(zeta) e^{i phi}  -|zeta|^2 + i s |
/// | 0   e^{i phi}                      sqrt(2) zeta   |
/// | 0   0                              1              |
/// ```
///
/// and the dilation is `diag(r, 1, 1/r)`. The conjugate on `zeta` in the
/// top row is what makes the matrix preserve the form.
pub fn similarity_matrix(sim: &Similarity) -> Result<GroupElement> {
    if sim.r <= 0.0 || !sim.r.is_finite() {
        return Err(GeometryError::NonPositiveDilation(sim.r));
    }
    let zero = Complex::new(0.0, 0.0);
    let one = Complex::new(1.0, 0.0);
    let rot = Complex::from_polar(1.0, sim.phi);
    let iso = GroupElement([
        [one, -sim.zeta.conj() * rot * SQRT_2, Complex::new(-sim.zeta.norm_sqr(), sim.s)],
        [zero, rot, sim.zeta * SQRT_2],
        [zero, zero, one],
    ]);
    let dil = GroupElement::diag([sim.r.into(), one, (1.0 / sim.r).into()]);
    Ok(iso * dil)
}

/// Koranyi inversion, realized by the form matrix `J`. Swaps `o` and infinity.
pub fn inversion() -> GroupElement {
    GroupElement::j()
}

/// Closed form of the inversion on finite points other than the origin:
/// `(z, t) -> (z / (-|z|^2 + it), -t / (|z|^4 + t^2))`.
pub fn inversion_coords(p: &HeisPoint) -> BoundaryPoint {
    let w = Complex::new(-p.z.norm_sqr(), p.t);
    if w.norm_sqr() == 0.0 {
        return BoundaryPoint::Infinity;
    }
    BoundaryPoint::finite(p.z / w, -p.t / w.norm_sqr())
}

/// Projective action of a J-unitary matrix on the boundary.
pub fn apply(g: &GroupElement, p: &BoundaryPoint) -> Result<BoundaryPoint> {
    let v = g.apply_vec(&standard_lift(p)).normalized();
    project_with(&v, ACTION_TOL, ACTION_INF_TOL)
}

/// Standard infinite R-circle `{(x, 0)} U {inf}`; infinite `x` maps to infinity.
pub fn r_circle_point(x: f64) -> BoundaryPoint {
    if x.is_infinite() {
        BoundaryPoint::Infinity
    } else {
        BoundaryPoint::finite(Complex::new(x, 0.0), 0.0)
    }
}

/// Point `(r e^{i theta}, t0)` on the horizontal chain of radius `r` at height `t0`.
pub fn c_circle_point(r: f64, t0: f64, theta: f64) -> Result<BoundaryPoint> {
    if r.is_nan() || r <= 0.0 {
        return Err(GeometryError::NonPositiveRadius(r));
    }
    Ok(BoundaryPoint::finite(Complex::from_polar(r, theta), t0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{is_j_unitary, HVector};
    use crate::tolerance::{rel_close, DEFAULT_REL_TOL};
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn fin(re: f64, im: f64, t: f64) -> BoundaryPoint {
        BoundaryPoint::finite(c(re, im), t)
    }

    fn close(p: &BoundaryPoint, q: &BoundaryPoint, tol: f64) -> bool {
        match (p, q) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                (a.z - b.z).norm() <= tol && (a.t - b.t).abs() <= tol
            }
            _ => false,
        }
    }

    #[test]
    fn group_law_examples() {
        let p = HeisPoint::new(c(0.5, -2.0), 3.0);
        assert_eq!(group_mul(&p, &HeisPoint::identity()), p);
        let one = HeisPoint::new(c(1.0, 0.0), 0.0);
        let i = HeisPoint::new(c(0.0, 1.0), 0.0);
        assert_eq!(group_mul(&one, &i), HeisPoint::new(c(1.0, 1.0), -2.0));
        assert_eq!(group_mul(&i, &one), HeisPoint::new(c(1.0, 1.0), 2.0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(group_inv(&HeisPoint::identity()), HeisPoint::new(c(-0.0, -0.0), -0.0));
        let p = HeisPoint::new(c(1.0, 0.0), 0.0);
        assert_eq!(group_mul(&p, &group_inv(&p)), HeisPoint::identity());
        let q = HeisPoint::new(c(0.0, 1.0), 3.0);
        assert_eq!(group_inv(&q), HeisPoint::new(c(-0.0, -1.0), -3.0));
        assert_eq!(group_mul(&q, &group_inv(&q)), HeisPoint::identity());
    }

    #[test]
    fn gauge_examples() {
        assert_eq!(gauge(&HeisPoint::identity()), 0.0);
        assert_eq!(gauge(&HeisPoint::new(c(1.0, 0.0), 0.0)), 1.0);
        assert_eq!(gauge(&HeisPoint::new(c(0.0, 0.0), 4.0)), 2.0);
    }

    #[test]
    fn dk_examples() {
        for &(x, y) in &[(0.0, 1.0), (-2.5, 4.0), (3.0, 3.0)] {
            let d = dk(&fin(x, 0.0, 0.0), &fin(y, 0.0, 0.0)).unwrap();
            assert!((d - (x - y).abs()).abs() < 1e-15);
            let d2 = dk_via_form(&fin(x, 0.0, 0.0), &fin(y, 0.0, 0.0)).unwrap();
            assert!((d2 - (x - y).abs()).abs() < 1e-14, "{d2}");
        }
        let p = fin(0.3, -0.7, 2.0);
        assert_eq!(dk(&p, &p), Ok(0.0));
        assert_eq!(dk_via_form(&p, &p), Ok(0.0));
        assert!((dk(&BoundaryPoint::origin(), &fin(0.0, 0.0, 9.0)).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(dk_via_form(&BoundaryPoint::origin(), &fin(1.0, 0.0, 0.0)), Ok(1.0));
        assert_eq!(dk(&p, &BoundaryPoint::Infinity), Err(GeometryError::MetricAtInfinity));
        assert_eq!(dk_via_form(&BoundaryPoint::Infinity, &p), Err(GeometryError::MetricAtInfinity));
    }

    #[test]
    fn dk_is_gauge_of_left_difference() {
        let a = HeisPoint::new(c(0.4, 1.1), -0.6);
        let b = HeisPoint::new(c(-1.3, 0.2), 2.2);
        let via_group = gauge(&group_mul(&group_inv(&a), &b));
        assert!(rel_close(via_group, dk_finite(&a, &b), 1e-14));
    }

    #[test]
    fn similarity_examples() {
        let id = similarity_matrix(&Similarity::identity()).unwrap();
        assert_eq!(id, GroupElement::identity());

        let zeta = c(0.7, -1.3);
        let g = similarity_matrix(&Similarity::translation(zeta, 2.5)).unwrap();
        assert!(close(&apply(&g, &BoundaryPoint::origin()).unwrap(), &fin(0.7, -1.3, 2.5), 1e-14));

        let g = similarity_matrix(&Similarity::dilation(3.0)).unwrap();
        let img = apply(&g, &fin(0.5, -1.0, 0.25)).unwrap();
        assert!(close(&img, &fin(1.5, -3.0, 2.25), 1e-14));

        assert_eq!(
            similarity_matrix(&Similarity::dilation(0.0)),
            Err(GeometryError::NonPositiveDilation(0.0))
        );
        assert!(similarity_matrix(&Similarity::dilation(-1.0)).is_err());
    }

    #[test]
    fn similarity_matrix_matches_coordinates() {
        let sim = Similarity { r: 1.7, phi: 0.9, zeta: c(-0.4, 1.2), s: -2.0 };
        let g = similarity_matrix(&sim).unwrap();
        assert!(is_j_unitary(&g, DEFAULT_REL_TOL));
        let p = HeisPoint::new(c(0.3, 0.8), 1.5);
        let expected = BoundaryPoint::Finite(sim.act(&p));
        assert!(close(&apply(&g, &p.into()).unwrap(), &expected, 1e-12));
        assert_eq!(apply(&g, &BoundaryPoint::Infinity).unwrap(), BoundaryPoint::Infinity);
    }

    #[test]
    fn printed_unconjugated_matrix_is_not_j_unitary() {
        let zeta = c(0.5, 1.0);
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let printed = GroupElement([
            [one, -zeta * SQRT_2, c(-zeta.norm_sqr(), 0.0)],
            [zero, one, zeta * SQRT_2],
            [zero, zero, one],
        ]);
        assert!(!is_j_unitary(&printed, DEFAULT_REL_TOL));
    }

    #[test]
    fn inversion_examples() {
        let j = inversion();
        assert_eq!(apply(&j, &BoundaryPoint::Infinity), Ok(BoundaryPoint::origin()));
        assert_eq!(apply(&j, &BoundaryPoint::origin()), Ok(BoundaryPoint::Infinity));
        let img = apply(&j, &fin(1.0, 0.0, 0.0)).unwrap();
        assert!(close(&img, &fin(-1.0, 0.0, 0.0), 1e-15));
        assert_eq!(j * j, GroupElement::identity());

        let p = HeisPoint::new(c(0.6, -0.2), 1.3);
        let by_matrix = apply(&j, &p.into()).unwrap();
        assert!(close(&by_matrix, &inversion_coords(&p), 1e-14));
        let back = apply(&j, &by_matrix).unwrap();
        assert!(close(&back, &p.into(), 1e-13));
    }

    #[test]
    fn circle_points() {
        assert_eq!(r_circle_point(0.0), BoundaryPoint::origin());
        assert_eq!(r_circle_point(2.0), fin(2.0, 0.0, 0.0));
        assert_eq!(r_circle_point(f64::INFINITY), BoundaryPoint::Infinity);

        assert!(close(&c_circle_point(1.0, 0.0, 0.0).unwrap(), &fin(1.0, 0.0, 0.0), 1e-15));
        assert!(close(&c_circle_point(1.0, 0.0, PI).unwrap(), &fin(-1.0, 0.0, 0.0), 1e-15));
        assert!(close(&c_circle_point(2.0, 5.0, PI / 2.0).unwrap(), &fin(0.0, 2.0, 5.0), 1e-15));
        assert_eq!(c_circle_point(0.0, 1.0, 0.0), Err(GeometryError::NonPositiveRadius(0.0)));
    }

    #[test]
    fn lifts_of_chain_points_stay_in_their_complex_line() {
        // Lifts of (r e^{i theta}, t0) all have first coordinate -r^2 + i t0.
        for k in 0..8 {
            let p = c_circle_point(1.5, -0.5, k as f64).unwrap();
            let HVector([z1, _, z3]) = standard_lift(&p);
            assert!((z1 - c(-2.25, -0.5)).norm() < 1e-14);
            assert_eq!(z3, c(1.0, 0.0));
        }
    }
}
