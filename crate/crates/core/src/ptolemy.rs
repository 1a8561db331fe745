//! Ptolemaean inequality on the boundary and its equality cases.
//!
//! With `s1 = |X1|^{1/2}` and `s2 = |X2|^{1/2}` every quadruple of distinct
//! boundary points satisfies
//!
//! ```text
//! s1 + s2 >= 1,    -1 <= s1 - s2 <= 1
//! ```
//!
//! and one of these is an equality exactly when the four points lie on an
//! R-circle. Which one is decided by how the points sit on that circle:
//!
//! | equality      | separating pairs             |
//! |---------------|------------------------------|
//! | `s1 - s2 = 1` | `{p1, p3}` and `{p2, p4}`    |
//! | `s2 - s1 = 1` | `{p1, p2}` and `{p3, p4}`    |
//! | `s1 + s2 = 1` | `{p1, p4}` and `{p2, p3}`    |
//!
//! For finite points the same statements read as Ptolemy's inequality for
//! the Koranyi-Cygan metric, see [`verify_metric`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crossratio::{triple, CrossRatioTriple, Quadruple};
use crate::error::{GeometryError, Result};
use crate::heisenberg::dk_finite;

/// Which of the three Ptolemaean inequalities is an equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EqualityCase {
    None,
    /// `s1 - s2 = 1`: `p1, p3` separate `p2, p4`.
    Separate13,
    /// `s2 - s1 = 1`: `p1, p2` separate `p3, p4`.
    Separate12,
    /// `s1 + s2 = 1`: `p1, p4` separate `p2, p3`.
    Separate14,
}

impl EqualityCase {
    pub const ALL: [EqualityCase; 4] =
        [EqualityCase::None, EqualityCase::Separate13, EqualityCase::Separate12, EqualityCase::Separate14];

    pub fn name(&self) -> &'static str {
        match self {
            EqualityCase::None => "None",
            EqualityCase::Separate13 => "Separate13",
            EqualityCase::Separate12 => "Separate12",
            EqualityCase::Separate14 => "Separate14",
        }
    }
}

impl fmt::Display for EqualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PtolemyReport {
    pub s1: f64,
    pub s2: f64,
    /// `s1 + s2 - 1`
    pub slack_sum: f64,
    /// `s1 - s2 + 1`
    pub slack_diff_lo: f64,
    /// `1 - s1 + s2`
    pub slack_diff_hi: f64,
    pub equality_case: EqualityCase,
    pub r_circle: bool,
    /// Slacks of the metric form, present when all four points are finite.
    pub metric_slacks: Option<[f64; 3]>,
    #[serde(skip)]
    pub triple: CrossRatioTriple,
}

impl PtolemyReport {
    pub fn slacks(&self) -> [f64; 3] {
        [self.slack_sum, self.slack_diff_lo, self.slack_diff_hi]
    }

    pub fn min_slack(&self) -> f64 {
        self.slacks().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// True when some slack is below `-tol`.
    pub fn violates(&self, tol: f64) -> bool {
        self.min_slack() < -tol
    }
}

/// Evaluates the inequality for `q` and classifies equality at `eq_tol`.
///
/// The R-circle flag uses the positivity test at `sqrt(eq_tol)`: an equality
/// defect of size `d` leaves imaginary parts of relative size `O(sqrt(d))`.
pub fn verify(q: &Quadruple, eq_tol: f64) -> Result<PtolemyReport> {
    let t = triple(q)?;
    let s1 = t.x1.norm().sqrt();
    let s2 = t.x2.norm().sqrt();
    let slack_sum = s1 + s2 - 1.0;
    let slack_diff_lo = s1 - s2 + 1.0;
    let slack_diff_hi = 1.0 - s1 + s2;

    let candidates = [
        (EqualityCase::Separate13, slack_diff_hi.abs()),
        (EqualityCase::Separate12, slack_diff_lo.abs()),
        (EqualityCase::Separate14, slack_sum.abs()),
    ];
    let equality_case = candidates
        .into_iter()
        .filter(|&(_, dev)| dev <= eq_tol)
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map_or(EqualityCase::None, |(c, _)| c);

    let metric_slacks = if q.all_finite() { Some(verify_metric(q)?) } else { None };

    Ok(PtolemyReport {
        s1,
        s2,
        slack_sum,
        slack_diff_lo,
        slack_diff_hi,
        equality_case,
        r_circle: triple_is_r_circle(&t, eq_tol.sqrt()),
        metric_slacks,
        triple: t,
    })
}

/// Slacks `RHS - LHS` of the three metric inequalities, in order
///
/// ```text
/// d23 d14 <= d24 d13 + d12 d34
/// d13 d24 <= d12 d34 + d23 d14
/// d12 d34 <= d13 d24 + d23 d14
/// ```
///
/// The first vanishes when `p1, p4` separate `p2, p3`, the second when
/// `p1, p3` separate `p2, p4`, the third when `p1, p2` separate `p3, p4`.
pub fn verify_metric(q: &Quadruple) -> Result<[f64; 3]> {
    let [cross, diag, sides] = metric_products(q)?;
    Ok([diag + sides - cross, sides + cross - diag, diag + cross - sides])
}

/// The products `d23 d14`, `d13 d24`, `d12 d34` of a finite quadruple.
pub fn metric_products(q: &Quadruple) -> Result<[f64; 3]> {
    let pts: Vec<_> = q
        .points()
        .iter()
        .map(|p| p.as_finite().copied().ok_or(GeometryError::MetricFormRequiresFinite))
        .collect::<Result<_>>()?;
    let d = |a: usize, b: usize| dk_finite(&pts[a - 1], &pts[b - 1]);
    Ok([d(2, 3) * d(1, 4), d(1, 3) * d(2, 4), d(1, 2) * d(3, 4)])
}

/// Largest of the three metric products; the natural scale for metric slacks.
pub fn metric_scale(q: &Quadruple) -> Result<f64> {
    Ok(metric_products(q)?.into_iter().fold(0.0, f64::max))
}

/// All three basic cross-ratios real and positive, up to `tol` in angle.
///
/// This is the criterion for the four points to lie on a common R-circle.
pub fn is_r_circle(q: &Quadruple, tol: f64) -> Result<bool> {
    Ok(triple_is_r_circle(&triple(q)?, tol))
}

pub fn triple_is_r_circle(t: &CrossRatioTriple, tol: f64) -> bool {
    t.values().iter().all(|x| x.im.abs() <= tol * x.norm() && x.re > 0.0)
}
