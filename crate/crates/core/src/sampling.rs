//! Seeded generators of boundary quadruples with ground-truth labels.
//!
//! Sample `i` of a stream is drawn from ChaCha8 seeded with the spec seed and
//! switched to stream `i`, so any sample can be regenerated on its own and a
//! stream can be split into blocks without changing its contents. Floats are
//! built from the top 53 bits of each 64-bit output, which keeps the streams
//! bit-identical on every platform.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::crossratio::Quadruple;
use crate::error::{GeometryError, Result};
use crate::heisenberg::{
    c_circle_point, dk_finite, group_mul, inversion, r_circle_point, similarity_matrix, BoundaryPoint, HeisPoint,
    Similarity,
};
use crate::hermitian::{Complex, GroupElement};
use crate::ptolemy::EqualityCase;

/// Bound on `|zeta|` for random twist factors.
pub const TWIST_ZETA_MAX: f64 = 2.0;
/// Bound on `|s|` for random twist factors.
pub const TWIST_S_MAX: f64 = 4.0;
/// Default word length of random twists.
pub const DEFAULT_TWIST_DEPTH: usize = 6;
pub const DEFAULT_BOX: f64 = 2.0;
pub const DEFAULT_MIN_GAP: f64 = 0.1;

const MAX_ATTEMPTS: usize = 1000;

/// Deterministic random source.
#[derive(Debug, Clone)]
pub struct SampleRng(ChaCha8Rng);

impl SampleRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        SampleRng(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        ((self.unit() * n as f64) as usize).min(n - 1)
    }

    /// Uniform in the closed disc of radius `r`.
    pub fn disc(&mut self, r: f64) -> Complex {
        Complex::from_polar(r * self.unit().sqrt(), self.uniform(0.0, TAU))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    Generic,
    Rcircle,
    Ccircle,
}

impl FromStr for SampleKind {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(SampleKind::Generic),
            "rcircle" => Ok(SampleKind::Rcircle),
            "ccircle" => Ok(SampleKind::Ccircle),
            other => Err(GeometryError::InvalidSpec(format!("unknown kind {other:?}"))),
        }
    }
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleKind::Generic => "generic",
            SampleKind::Rcircle => "rcircle",
            SampleKind::Ccircle => "ccircle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSpec {
    pub seed: u64,
    pub kind: SampleKind,
    pub count: usize,
    /// Coordinate bound: `|z| <= box`, `|t| <= box^2`, R-circle parameters in `[-box, box]`.
    pub box_size: f64,
    pub twist_depth: usize,
    /// Minimum pairwise gap (dk for generic, parameter distance on circles).
    pub min_gap: f64,
    /// Force one pair of points to sit exactly `min_gap` apart.
    pub near_degenerate: bool,
}

impl SampleSpec {
    pub fn new(kind: SampleKind, count: usize, seed: u64) -> Self {
        SampleSpec {
            seed,
            kind,
            count,
            box_size: DEFAULT_BOX,
            twist_depth: DEFAULT_TWIST_DEPTH,
            min_gap: DEFAULT_MIN_GAP,
            near_degenerate: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(GeometryError::InvalidSpec("count must be at least 1".into()));
        }
        if self.box_size <= 0.0 || !self.box_size.is_finite() {
            return Err(GeometryError::InvalidSpec(format!("box must be positive, got {}", self.box_size)));
        }
        if self.min_gap <= 0.0 || !self.min_gap.is_finite() {
            return Err(GeometryError::InvalidSpec(format!("min_gap must be positive, got {}", self.min_gap)));
        }
        Ok(())
    }
}

/// Construction label carried by each sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Generic,
    RCircleSeparate13,
    RCircleSeparate12,
    RCircleSeparate14,
    Chain,
}

impl Label {
    /// Equality case implied by the construction, if it forces one.
    pub fn expected_case(&self) -> EqualityCase {
        match self {
            Label::RCircleSeparate13 => EqualityCase::Separate13,
            Label::RCircleSeparate12 => EqualityCase::Separate12,
            Label::RCircleSeparate14 => EqualityCase::Separate14,
            Label::Generic | Label::Chain => EqualityCase::None,
        }
    }

    pub fn is_r_circle(&self) -> bool {
        matches!(self, Label::RCircleSeparate13 | Label::RCircleSeparate12 | Label::RCircleSeparate14)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Label::Generic => "Generic",
            Label::RCircleSeparate13 => "RCircleSeparate13",
            Label::RCircleSeparate12 => "RCircleSeparate12",
            Label::RCircleSeparate14 => "RCircleSeparate14",
            Label::Chain => "Chain",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        [Label::Generic, Label::RCircleSeparate13, Label::RCircleSeparate12, Label::RCircleSeparate14, Label::Chain]
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| GeometryError::InvalidSpec(format!("unknown label {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabeledQuadruple {
    pub q: Quadruple,
    pub label: Label,
}

/// Which pairing interleaves for four distinct parameters on `R U {inf}`.
///
/// Infinite parameters sort last; cutting the circle at any point preserves
/// interleaving, so the linear order suffices.
pub fn separation_label(params: [f64; 4]) -> Label {
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| params[a].total_cmp(&params[b]));
    let mut pos = [0usize; 4];
    for (rank, &i) in order.iter().enumerate() {
        pos[i] = rank;
    }
    let separates = |a: usize, b: usize, c: usize, d: usize| {
        let (lo, hi) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        let inside = |k: usize| lo < pos[k] && pos[k] < hi;
        inside(c) != inside(d)
    };
    if separates(0, 2, 1, 3) {
        Label::RCircleSeparate13
    } else if separates(0, 1, 2, 3) {
        Label::RCircleSeparate12
    } else {
        Label::RCircleSeparate14
    }
}

/// Random Heisenberg isometry with `|zeta| <= 2`, `|s| <= 4`.
pub fn random_isometry(rng: &mut SampleRng) -> Similarity {
    Similarity {
        r: 1.0,
        phi: rng.uniform(0.0, TAU),
        zeta: rng.disc(TWIST_ZETA_MAX),
        s: rng.uniform(-TWIST_S_MAX, TWIST_S_MAX),
    }
}

/// Factors of a random twist: each is the inversion (probability 1/3) or a
/// random isometry.
pub fn random_twist_factors(rng: &mut SampleRng, depth: usize) -> Vec<GroupElement> {
    (0..depth)
        .map(|_| {
            if rng.index(3) == 0 {
                inversion()
            } else {
                similarity_matrix(&random_isometry(rng)).expect("r = 1")
            }
        })
        .collect()
}

/// Product of `depth` random J-unitary factors.
pub fn random_junitary(rng: &mut SampleRng, depth: usize) -> GroupElement {
    random_twist_factors(rng, depth)
        .into_iter()
        .fold(GroupElement::identity(), |acc, f| f * acc)
}

/// Stream of labeled quadruples for `spec`.
#[derive(Debug, Clone)]
pub struct Sampler {
    spec: SampleSpec,
    next: usize,
}

pub fn sample(spec: SampleSpec) -> Result<Sampler> {
    spec.validate()?;
    Ok(Sampler { spec, next: 0 })
}

impl Sampler {
    pub fn spec(&self) -> &SampleSpec {
        &self.spec
    }

    /// The `index`-th sample, independent of any other.
    pub fn sample_at(&self, index: usize) -> Result<LabeledQuadruple> {
        sample_one(&self.spec, index)
    }
}

impl Iterator for Sampler {
    type Item = Result<LabeledQuadruple>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.spec.count {
            return None;
        }
        let item = self.sample_at(self.next);
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.spec.count - self.next;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Sampler {}

pub fn sample_one(spec: &SampleSpec, index: usize) -> Result<LabeledQuadruple> {
    let mut rng = SampleRng::new(spec.seed, index as u64);
    for _ in 0..MAX_ATTEMPTS {
        let drawn = match spec.kind {
            SampleKind::Generic => draw_generic(spec, &mut rng),
            SampleKind::Rcircle => draw_rcircle(spec, &mut rng),
            SampleKind::Ccircle => draw_chain(spec, &mut rng),
        };
        let Some((points, label)) = drawn else { continue };
        let g = random_junitary(&mut rng, spec.twist_depth);
        let Ok(base) = Quadruple::from_array(points) else { continue };
        if let Ok(q) = base.transform(&g) {
            return Ok(LabeledQuadruple { q, label });
        }
    }
    Err(GeometryError::GapUnsatisfiable { min_gap: spec.min_gap, attempts: MAX_ATTEMPTS })
}

fn close_pair(rng: &mut SampleRng) -> (usize, usize) {
    let a = rng.index(4);
    let b = (a + 1 + rng.index(3)) % 4;
    (a, b)
}

fn draw_generic(spec: &SampleSpec, rng: &mut SampleRng) -> Option<([BoundaryPoint; 4], Label)> {
    let b = spec.box_size;
    let mut pts: [HeisPoint; 4] =
        std::array::from_fn(|_| HeisPoint::new(rng.disc(b), rng.uniform(-b * b, b * b)));
    let pair = spec.near_degenerate.then(|| close_pair(rng));
    if let Some((i, j)) = pair {
        // Offset of gauge exactly min_gap in a random direction.
        let phase = rng.uniform(0.0, TAU);
        let (c, s) = (phase.cos(), phase.sin());
        let eps = spec.min_gap;
        let offset = HeisPoint::new(Complex::from_polar(eps * c.abs().sqrt(), rng.uniform(0.0, TAU)), eps * eps * s);
        pts[j] = group_mul(&pts[i], &offset);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pair == Some((i, j)) || pair == Some((j, i)) {
                continue;
            }
            if dk_finite(&pts[i], &pts[j]) < spec.min_gap {
                return None;
            }
        }
    }
    Some((pts.map(BoundaryPoint::Finite), Label::Generic))
}

fn draw_rcircle(spec: &SampleSpec, rng: &mut SampleRng) -> Option<([BoundaryPoint; 4], Label)> {
    let b = spec.box_size;
    let mut xs: [f64; 4] = std::array::from_fn(|_| rng.uniform(-b, b));
    let pair = spec.near_degenerate.then(|| close_pair(rng));
    if let Some((i, j)) = pair {
        xs[j] = xs[i] + spec.min_gap;
    }
    if rng.index(8) == 0 {
        let k = rng.index(4);
        if pair.is_none_or(|(i, j)| k != i && k != j) {
            xs[k] = f64::INFINITY;
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pair == Some((i, j)) || pair == Some((j, i)) {
                continue;
            }
            if xs[i].is_finite() && xs[j].is_finite() && (xs[i] - xs[j]).abs() < spec.min_gap {
                return None;
            }
        }
    }
    Some((xs.map(r_circle_point), separation_label(xs)))
}

fn draw_chain(spec: &SampleSpec, rng: &mut SampleRng) -> Option<([BoundaryPoint; 4], Label)> {
    let b = spec.box_size;
    let r = rng.uniform(0.25 * b, b);
    let t0 = rng.uniform(-b * b, b * b);
    let mut th: [f64; 4] = std::array::from_fn(|_| rng.uniform(0.0, TAU));
    let pair = spec.near_degenerate.then(|| close_pair(rng));
    if let Some((i, j)) = pair {
        th[j] = th[i] + spec.min_gap;
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pair == Some((i, j)) || pair == Some((j, i)) {
                continue;
            }
            let d = (th[i] - th[j]).rem_euclid(TAU);
            if d.min(TAU - d) < spec.min_gap {
                return None;
            }
        }
    }
    let pts = th.map(|a| c_circle_point(r, t0, a).expect("r > 0"));
    Some((pts, Label::Chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::is_j_unitary;

    #[test]
    fn separation_labels() {
        assert_eq!(separation_label([0.0, 1.0, 2.0, 3.0]), Label::RCircleSeparate13);
        assert_eq!(separation_label([0.0, 2.0, 1.0, 3.0]), Label::RCircleSeparate12);
        assert_eq!(separation_label([0.0, 1.0, 3.0, 2.0]), Label::RCircleSeparate14);
        // Rotating the circle does not change the pattern.
        assert_eq!(separation_label([3.0, 0.0, 1.0, 2.0]), Label::RCircleSeparate13);
        assert_eq!(separation_label([0.0, 1.0, 2.0, f64::INFINITY]), Label::RCircleSeparate13);
        // Cyclic order 0, 1, 2, inf is p4, p2, p3, p1.
        assert_eq!(separation_label([f64::INFINITY, 1.0, 2.0, 0.0]), Label::RCircleSeparate12);
    }

    #[test]
    fn twist_examples() {
        let mut rng = SampleRng::new(3, 0);
        assert_eq!(random_junitary(&mut rng, 0), GroupElement::identity());
        for depth in 0..8 {
            for _ in 0..50 {
                let g = random_junitary(&mut rng, depth);
                assert!(is_j_unitary(&g, 1e-9), "depth {depth}");
            }
        }
        // Find a depth-1 draw that picked the inversion.
        let found = (0..64).any(|s| {
            let mut r = SampleRng::new(s, 0);
            random_junitary(&mut r, 1) == inversion()
        });
        assert!(found);
    }

    #[test]
    fn unit_floats_in_range() {
        let mut rng = SampleRng::new(11, 5);
        for _ in 0..10_000 {
            let u = rng.unit();
            assert!((0.0..1.0).contains(&u));
            assert!(rng.index(4) < 4);
            assert!(rng.disc(2.0).norm() <= 2.0);
        }
    }

    #[test]
    fn rng_is_pinned() {
        // Guards against silent changes of the generator or seeding scheme.
        let mut a = SampleRng::new(42, 0);
        let mut b = SampleRng::new(42, 0);
        let first: Vec<u64> = (0..4).map(|_| a.next_u64()).collect();
        let again: Vec<u64> = (0..4).map(|_| b.next_u64()).collect();
        assert_eq!(first, again);
        let mut c = SampleRng::new(42, 1);
        assert_ne!(first[0], c.next_u64());
    }

    #[test]
    fn spec_validation() {
        let mut spec = SampleSpec::new(SampleKind::Generic, 0, 1);
        assert!(sample(spec).is_err());
        spec.count = 1;
        spec.box_size = 0.0;
        assert!(sample(spec).is_err());
        spec.box_size = 1.0;
        spec.min_gap = -1.0;
        assert!(sample(spec).is_err());
    }

    #[test]
    fn unsatisfiable_gap_errors() {
        let mut spec = SampleSpec::new(SampleKind::Rcircle, 1, 1);
        spec.box_size = 1.0;
        spec.min_gap = 5.0;
        let out = sample(spec).unwrap().next().unwrap();
        assert!(matches!(out, Err(GeometryError::GapUnsatisfiable { .. })));
    }

    #[test]
    fn deterministic_streams() {
        for kind in [SampleKind::Generic, SampleKind::Rcircle, SampleKind::Ccircle] {
            let spec = SampleSpec::new(kind, 20, 9);
            let a: Vec<_> = sample(spec).unwrap().collect::<Result<_>>().unwrap();
            let b: Vec<_> = sample(spec).unwrap().collect::<Result<_>>().unwrap();
            assert_eq!(a, b);
            let s = sample(spec).unwrap();
            assert_eq!(s.sample_at(7).unwrap(), a[7]);
        }
    }

    #[test]
    fn untwisted_rcircle_labels_follow_parameters() {
        let mut spec = SampleSpec::new(SampleKind::Rcircle, 200, 5);
        spec.twist_depth = 0;
        for item in sample(spec).unwrap() {
            let lq = item.unwrap();
            let xs = lq.q.points().map(|p| match p {
                BoundaryPoint::Finite(h) => {
                    assert_eq!(h.t, 0.0);
                    assert_eq!(h.z.im, 0.0);
                    h.z.re
                }
                BoundaryPoint::Infinity => f64::INFINITY,
            });
            assert_eq!(lq.label, separation_label(xs));
        }
    }
}
