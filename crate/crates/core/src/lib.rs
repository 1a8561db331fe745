//! Geometry of the boundary of complex hyperbolic 2-space.
//!
//! The boundary is the one point compactification of the Heisenberg group
//! `C x R`. This crate provides
//!
//! - [`hermitian`]: the signature (2,1) Hermitian form on `C^3`, standard
//!   lifts, projection and J-unitary matrices;
//! - [`heisenberg`]: group law, Koranyi gauge, Koranyi-Cygan metric,
//!   similarity and inversion matrices, R-circle and chain parametrizations;
//! - [`crossratio`]: Koranyi-Reimann cross-ratios and the cross-ratio variety;
//! - [`ptolemy`]: the Ptolemaean inequality with classification of the
//!   equality cases on R-circles;
//! - [`sampling`]: seeded quadruple generators with ground-truth labels;
//! - [`bergman`]: the Bergman distance between interior points;
//! - [`cli`]: the JSONL record format, batch reports and the `chyp` commands.
//!
//! ```
//! use chyp::{crossratio, heisenberg::r_circle_point, ptolemy};
//!
//! let q = crossratio::Quadruple::from_array([0.0, 1.0, 2.0, 3.0].map(r_circle_point)).unwrap();
//! let report = ptolemy::verify(&q, chyp::tolerance::EQ_TOL).unwrap();
//! assert_eq!(report.equality_case, ptolemy::EqualityCase::Separate13);
//! ```

pub mod bergman;
pub mod cli;
pub mod crossratio;
pub mod error;
pub mod heisenberg;
pub mod hermitian;
pub mod ptolemy;
pub mod sampling;
pub mod tolerance;

pub use error::{GeometryError, Result};
pub use heisenberg::{BoundaryPoint, HeisPoint, Similarity};
pub use hermitian::{Complex, GroupElement, HVector};
