//! Default tolerances shared by the math modules and surfaced by the CLI.
//!
//! Every comparison in the crate is relative: a quantity is measured against
//! the magnitude of the vectors, matrices or terms it was computed from.

/// Generic relative tolerance for lift classification and J-unitarity.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Null-cone test used for standard lifts.
pub const NULL_TOL: f64 = 1e-12;

/// Two boundary points are distinct when `|<a, b>| > DISTINCT_EPS * |a| |b|`.
pub const DISTINCT_EPS: f64 = 1e-12;

/// Projection tolerance used when acting with a J-unitary matrix.
///
/// Products of several twist factors lose a few digits, so the null-cone
/// check after an action is looser than [`DEFAULT_REL_TOL`].
pub const ACTION_TOL: f64 = 1e-8;

/// Snap-to-infinity threshold after an action.
///
/// Kept far below [`ACTION_TOL`] so that distant finite images are not
/// collapsed onto infinity.
pub const ACTION_INF_TOL: f64 = 1e-14;

/// Ptolemaean slacks below `-SLACK_TOL` count as violations.
pub const SLACK_TOL: f64 = 1e-9;

/// Threshold under which an equality expression counts as zero.
pub const EQ_TOL: f64 = 1e-7;

/// Variety residuals above this are reported as off the cross-ratio variety.
pub const VARIETY_TOL: f64 = 1e-8;

/// Relative comparison `|a - b| <= tol * max(|a|, |b|)`.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}
