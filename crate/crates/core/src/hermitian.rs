//! Linear algebra on `C^{2,1}`: the signature (2,1) Hermitian form, null and
//! negative vectors, standard lifts of boundary points and J-unitary matrices.
//!
//! The form is `<v, w> = w* J v` with
//!
//! ```text
//!     | 0 0 1 |
//! J = | 0 1 0 |
//!     | 1 0 0 |
//! ```
//!
//! so that `<v, w> = v1 conj(w3) + v2 conj(w2) + v3 conj(w1)`.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{GeometryError, Result};
use crate::heisenberg::{BoundaryPoint, HeisPoint};

pub type Complex = Complex64;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// A vector in `C^{2,1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HVector(pub [Complex; 3]);

impl HVector {
    pub const fn new(z1: Complex, z2: Complex, z3: Complex) -> Self {
        HVector([z1, z2, z3])
    }

    /// Vector with real entries.
    pub fn real(z1: f64, z2: f64, z3: f64) -> Self {
        HVector([z1.into(), z2.into(), z3.into()])
    }

    /// The lift `o = (0, 0, 1)` of the Heisenberg origin.
    pub fn origin() -> Self {
        Self::real(0.0, 0.0, 1.0)
    }

    /// The lift `(1, 0, 0)` of the point at infinity.
    pub fn infinity() -> Self {
        Self::real(1.0, 0.0, 0.0)
    }

    /// Euclidean norm in `C^3`.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scale(&self, k: Complex) -> Self {
        HVector(self.0.map(|c| c * k))
    }

    /// Rescale so the largest component has modulus one.
    ///
    /// Every projective quantity in this crate is invariant under this.
    pub fn normalized(&self) -> Self {
        let m = self.max_abs();
        if m == 0.0 {
            *self
        } else {
            self.scale(Complex::new(1.0 / m, 0.0))
        }
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a}, {b}, {c})")
    }
}

/// The Hermitian form `<v, w> = w* J v`.
///
/// Linear in `v`, conjugate-linear in `w`.
pub fn herm(v: &HVector, w: &HVector) -> Complex {
    let [v1, v2, v3] = v.0;
    let [w1, w2, w3] = w.0;
    v1 * w3.conj() + v2 * w2.conj() + v3 * w1.conj()
}

/// Sign class of `<v, v>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceClass {
    Negative,
    Null,
    Positive,
}

/// Classify `v` by the sign of `<v, v>` relative to `tol * |v|^2`.
pub fn classify(v: &HVector, tol: f64) -> Result<SpaceClass> {
    if v.is_zero() {
        return Err(GeometryError::DegenerateVector);
    }
    let q = herm(v, v).re;
    let band = tol * v.norm_sqr();
    Ok(if q < -band {
        SpaceClass::Negative
    } else if q > band {
        SpaceClass::Positive
    } else {
        SpaceClass::Null
    })
}

/// Standard lift `(-|z|^2 + it, sqrt(2) z, 1)` of a finite point, `(1, 0, 0)` of infinity.
pub fn standard_lift(p: &BoundaryPoint) -> HVector {
    match p {
        BoundaryPoint::Infinity => HVector::infinity(),
        BoundaryPoint::Finite(HeisPoint { z, t }) => HVector::new(
            Complex::new(-z.norm_sqr(), *t),
            *z * SQRT_2,
            Complex::new(1.0, 0.0),
        ),
    }
}

/// Boundary point represented by a null vector.
///
/// Inverse of [`standard_lift`] up to a nonzero complex multiple.
pub fn project(v: &HVector, tol: f64) -> Result<BoundaryPoint> {
    project_with(v, tol, tol)
}

/// [`project`] with separate thresholds for the null-cone test and for
/// snapping to infinity (`|v3| <= inf_tol * |v|`).
pub fn project_with(v: &HVector, null_tol: f64, inf_tol: f64) -> Result<BoundaryPoint> {
    if classify(v, null_tol)? != SpaceClass::Null {
        return Err(GeometryError::NotBoundary);
    }
    let [v1, v2, v3] = v.0;
    // A null vector with v3 = 0 has v2 = 0 as well, so it is a multiple of (1, 0, 0).
    if v3.norm() <= inf_tol * v.norm() {
        return Ok(BoundaryPoint::Infinity);
    }
    let z = v2 / (v3 * SQRT_2);
    let t = (v1 / v3).im;
    Ok(BoundaryPoint::Finite(HeisPoint::new(z, t)))
}

/// A 3x3 complex matrix acting on `C^{2,1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement(pub [[Complex; 3]; 3]);

impl GroupElement {
    pub fn identity() -> Self {
        Self::diag([1.0.into(), 1.0.into(), 1.0.into()])
    }

    pub fn diag(d: [Complex; 3]) -> Self {
        let zero = Complex::new(0.0, 0.0);
        let mut m = [[zero; 3]; 3];
        for (i, di) in d.into_iter().enumerate() {
            m[i][i] = di;
        }
        GroupElement(m)
    }

    /// The form matrix `J`.
    pub fn j() -> Self {
        let zero = Complex::new(0.0, 0.0);
        let one = Complex::new(1.0, 0.0);
        GroupElement([[zero, zero, one], [zero, one, zero], [one, zero, zero]])
    }

    pub fn conj_transpose(&self) -> Self {
        let m = &self.0;
        GroupElement(std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].conj())))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Inverse of a J-unitary matrix, `J M* J`.
    pub fn j_inverse(&self) -> Self {
        Self::j() * self.conj_transpose() * Self::j()
    }

    pub fn apply_vec(&self, v: &HVector) -> HVector {
        let m = &self.0;
        HVector(std::array::from_fn(|i| {
            m[i][0] * v.0[0] + m[i][1] * v.0[1] + m[i][2] * v.0[2]
        }))
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        let (a, b) = (&self.0, &rhs.0);
        GroupElement(std::array::from_fn(|i| {
            std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j])
        }))
    }
}

impl Mul<HVector> for GroupElement {
    type Output = HVector;

    fn mul(self, v: HVector) -> HVector {
        self.apply_vec(&v)
    }
}

/// Largest entry of `M* J M - J`, the defect from preserving the form.
pub fn j_unitary_defect(m: &GroupElement) -> f64 {
    let jm = GroupElement::j();
    let g = m.conj_transpose() * jm * *m;
    g.0.iter()
        .flatten()
        .zip(jm.0.iter().flatten())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// True iff `max |M* J M - J| <= tol * max |M|^2`.
pub fn is_j_unitary(m: &GroupElement, tol: f64) -> bool {
    let scale = m.max_abs().powi(2);
    j_unitary_defect(m) <= tol * scale
}
