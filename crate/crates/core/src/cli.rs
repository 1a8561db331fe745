//! The `chyp` command line: JSONL quadruple records, batch verification
//! reports and the subcommand implementations.
//!
//! Exit codes: `0` success, `1` inequality violations or label mismatches,
//! `2` usage, parse or domain errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bergman::{bergman_distance, InteriorPoint};
use crate::crossratio::{triple, CrossRatioTriple, Quadruple};
use crate::error::GeometryError;
use crate::heisenberg::{dk, dk_via_form, BoundaryPoint};
use crate::hermitian::Complex;
use crate::ptolemy::{metric_scale, verify, EqualityCase, PtolemyReport};
use crate::sampling::{self, Label, LabeledQuadruple, SampleKind, SampleSpec};
use crate::tolerance::{EQ_TOL, SLACK_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// A boundary point on the wire: `{"z": [re, im], "t": t}` or `"inf"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRecord {
    Finite { z: [f64; 2], t: f64 },
    Named(String),
}

impl From<&BoundaryPoint> for PointRecord {
    fn from(p: &BoundaryPoint) -> Self {
        match p {
            BoundaryPoint::Finite(h) => PointRecord::Finite { z: [h.z.re, h.z.im], t: h.t },
            BoundaryPoint::Infinity => PointRecord::Named("inf".into()),
        }
    }
}

impl TryFrom<&PointRecord> for BoundaryPoint {
    type Error = CliError;

    fn try_from(r: &PointRecord) -> Result<Self, CliError> {
        match r {
            PointRecord::Finite { z, t } => {
                if z.iter().chain(std::iter::once(t)).any(|v| !v.is_finite()) {
                    return Err(GeometryError::NonFinite.into());
                }
                Ok(BoundaryPoint::finite(Complex::new(z[0], z[1]), *t))
            }
            PointRecord::Named(s) if s == "inf" => Ok(BoundaryPoint::Infinity),
            PointRecord::Named(s) => Err(CliError::Parse(format!("expected \"inf\" or a point object, got {s:?}"))),
        }
    }
}

/// One line of a JSONL dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadrupleRecord {
    pub p1: PointRecord,
    pub p2: PointRecord,
    pub p3: PointRecord,
    pub p4: PointRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl QuadrupleRecord {
    pub fn from_labeled(lq: &LabeledQuadruple) -> Self {
        let [p1, p2, p3, p4] = lq.q.points().map(|p| PointRecord::from(&p));
        QuadrupleRecord { p1, p2, p3, p4, label: Some(lq.label.name().to_string()) }
    }

    pub fn quadruple(&self) -> Result<Quadruple, CliError> {
        let pts = [&self.p1, &self.p2, &self.p3, &self.p4].map(BoundaryPoint::try_from);
        let [a, b, c, d] = pts;
        Ok(Quadruple::new(a?, b?, c?, d?)?)
    }

    pub fn parsed_label(&self) -> Result<Option<Label>, CliError> {
        self.label.as_deref().map(|s| s.parse::<Label>().map_err(CliError::from)).transpose()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub tol: f64,
    pub eq_tol: f64,
}

/// Summary of a batch verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub count: usize,
    pub violations: usize,
    pub max_variety_residual: f64,
    /// `None` for an empty dataset.
    pub min_slack: Option<f64>,
    pub equality_counts: BTreeMap<String, usize>,
    pub mismatches: usize,
    pub tolerances: Tolerances,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.mismatches == 0
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<CliError> },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

/// Per-record outcome, reduced order-independently into a [`VerifyReport`].
#[derive(Debug, Clone, Copy)]
struct Tally {
    count: usize,
    violations: usize,
    max_residual: f64,
    min_slack: f64,
    cases: [usize; 4],
    mismatches: usize,
}

impl Tally {
    const EMPTY: Tally =
        Tally { count: 0, violations: 0, max_residual: 0.0, min_slack: f64::INFINITY, cases: [0; 4], mismatches: 0 };

    fn merge(self, o: Tally) -> Tally {
        Tally {
            count: self.count + o.count,
            violations: self.violations + o.violations,
            max_residual: self.max_residual.max(o.max_residual),
            min_slack: self.min_slack.min(o.min_slack),
            cases: std::array::from_fn(|i| self.cases[i] + o.cases[i]),
            mismatches: self.mismatches + o.mismatches,
        }
    }
}

/// Whether a report contradicts the construction label.
pub fn label_mismatch(label: Label, report: &PtolemyReport) -> bool {
    if report.equality_case != label.expected_case() {
        return true;
    }
    match label {
        l if l.is_r_circle() => !report.r_circle,
        Label::Chain => report.r_circle,
        _ => false,
    }
}

/// True when any projective slack is below `-tol`, any metric slack is
/// below `-tol` times the largest metric product, or a slack is not finite.
pub fn is_violation(q: &Quadruple, report: &PtolemyReport, tol: f64) -> bool {
    if report.slacks().iter().any(|s| !s.is_finite()) || report.violates(tol) {
        return true;
    }
    match (report.metric_slacks, metric_scale(q)) {
        (Some(m), Ok(scale)) => m.iter().any(|&s| !s.is_finite() || s < -tol * scale),
        _ => false,
    }
}

fn tally_one(q: &Quadruple, label: Option<Label>, tol: f64, eq_tol: f64) -> Result<Tally, GeometryError> {
    let report = verify(q, eq_tol)?;
    let case_idx = EqualityCase::ALL.iter().position(|c| *c == report.equality_case).expect("known case");
    let mut cases = [0; 4];
    cases[case_idx] = 1;
    Ok(Tally {
        count: 1,
        violations: usize::from(is_violation(q, &report, tol)),
        max_residual: report.triple.max_residual(),
        min_slack: report.min_slack(),
        cases,
        mismatches: label.map_or(0, |l| usize::from(label_mismatch(l, &report))),
    })
}

/// Verifies a batch in parallel. The result does not depend on the thread
/// count or on the order of `items`.
pub fn verify_batch(items: &[(Quadruple, Option<Label>)], tol: f64, eq_tol: f64) -> Result<VerifyReport, CliError> {
    let tally = items
        .par_iter()
        .enumerate()
        .map(|(i, (q, l))| {
            tally_one(q, *l, tol, eq_tol).map_err(|e| CliError::Line { line: i + 1, source: Box::new(e.into()) })
        })
        .try_reduce(|| Tally::EMPTY, |a, b| Ok(a.merge(b)))?;
    let equality_counts =
        EqualityCase::ALL.iter().zip(tally.cases).map(|(c, n)| (c.name().to_string(), n)).collect();
    Ok(VerifyReport {
        count: tally.count,
        violations: tally.violations,
        max_variety_residual: tally.max_residual,
        min_slack: (tally.count > 0).then_some(tally.min_slack),
        equality_counts,
        mismatches: tally.mismatches,
        tolerances: Tolerances { tol, eq_tol },
    })
}

/// Parses a JSONL dataset; blank lines are skipped, line numbers are 1-based.
pub fn read_records<R: BufRead>(reader: R) -> Result<Vec<(Quadruple, Option<Label>)>, CliError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<QuadrupleRecord>(&line)
            .map_err(CliError::from)
            .and_then(|r| Ok((r.quadruple()?, r.parsed_label()?)));
        out.push(parsed.map_err(|e| CliError::Line { line: i + 1, source: Box::new(e) })?);
    }
    Ok(out)
}

/// Writes `spec.count` records, one JSON object per line.
pub fn write_samples<W: Write>(spec: SampleSpec, mut w: W) -> Result<(), CliError> {
    for item in sampling::sample(spec)? {
        let rec = QuadrupleRecord::from_labeled(&item?);
        serde_json::to_writer(&mut w, &rec)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct DistOutput {
    dk: f64,
    dk_via_form: f64,
}

#[derive(Debug, Serialize)]
pub struct TripleOutput {
    pub x1: [f64; 2],
    pub x2: [f64; 2],
    pub x3: [f64; 2],
    pub res1: f64,
    pub res2: f64,
}

impl From<&CrossRatioTriple> for TripleOutput {
    fn from(t: &CrossRatioTriple) -> Self {
        let c = |x: Complex| [x.re, x.im];
        TripleOutput { x1: c(t.x1), x2: c(t.x2), x3: c(t.x3), res1: t.res1, res2: t.res2 }
    }
}

#[derive(Debug, Parser)]
#[command(name = "chyp", version, about = "Boundary geometry of complex hyperbolic 2-space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Koranyi-Cygan distance of two points, by formula and by Hermitian form
    Dist {
        /// `{"z":[re,im],"t":t}`
        p: String,
        q: String,
    },
    /// Cross-ratios X1, X2, X3 and variety residuals of a quadruple record
    Xratio { record: String },
    /// Ptolemaean slacks and equality classification of a quadruple record
    Ptolemy {
        record: String,
        #[arg(long, default_value_t = EQ_TOL)]
        eq_tol: f64,
    },
    /// Write seeded labeled quadruples as JSONL
    Sample(SampleArgs),
    /// Check the Ptolemaean inequality over a JSONL dataset
    Verify {
        /// Dataset path, `-` for stdin
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = SLACK_TOL)]
        tol: f64,
        #[arg(long, default_value_t = EQ_TOL)]
        eq_tol: f64,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Bergman distance between interior points given as `re,im` pairs
    Bergman {
        #[arg(allow_hyphen_values = true)]
        z1: String,
        #[arg(allow_hyphen_values = true)]
        z2: String,
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value = "generic")]
    pub kind: SampleKind,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "box", default_value_t = sampling::DEFAULT_BOX)]
    pub box_size: f64,
    #[arg(long, default_value_t = sampling::DEFAULT_TWIST_DEPTH)]
    pub twist_depth: usize,
    #[arg(long, default_value_t = sampling::DEFAULT_MIN_GAP)]
    pub min_gap: f64,
    /// Place one pair of points exactly `min_gap` apart
    #[arg(long)]
    pub near_degenerate: bool,
    /// Output path; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl SampleArgs {
    pub fn spec(&self) -> SampleSpec {
        SampleSpec {
            seed: self.seed,
            kind: self.kind,
            count: self.count,
            box_size: self.box_size,
            twist_depth: self.twist_depth,
            min_gap: self.min_gap,
            near_degenerate: self.near_degenerate,
        }
    }
}

fn parse_point(s: &str) -> Result<BoundaryPoint, CliError> {
    let rec: PointRecord = serde_json::from_str(s)?;
    BoundaryPoint::try_from(&rec)
}

fn parse_complex(s: &str) -> Result<Complex, CliError> {
    let bad = || CliError::Parse(format!("expected `re` or `re,im`, got {s:?}"));
    let mut parts = s.split(',').map(|p| p.trim().parse::<f64>().map_err(|_| bad()));
    let re = parts.next().ok_or_else(bad)??;
    let im = parts.next().transpose()?.unwrap_or(0.0);
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex::new(re, im))
}

fn write_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn write_report_text(out: &mut dyn Write, r: &VerifyReport) -> io::Result<()> {
    writeln!(out, "count                 {}", r.count)?;
    writeln!(out, "violations            {}", r.violations)?;
    writeln!(out, "mismatches            {}", r.mismatches)?;
    match r.min_slack {
        Some(s) => writeln!(out, "min_slack             {s:e}")?,
        None => writeln!(out, "min_slack             -")?,
    }
    writeln!(out, "max_variety_residual  {:e}", r.max_variety_residual)?;
    for (case, n) in &r.equality_counts {
        writeln!(out, "equality {case:<12} {n}")?;
    }
    writeln!(out, "tol {:e}  eq_tol {:e}", r.tolerances.tol, r.tolerances.eq_tol)
}

/// Runs a parsed command, returning the exit code.
pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Dist { p, q } => {
            let (p, q) = (parse_point(p)?, parse_point(q)?);
            write_json(out, &DistOutput { dk: dk(&p, &q)?, dk_via_form: dk_via_form(&p, &q)? })?;
        }
        Command::Xratio { record } => {
            let q = serde_json::from_str::<QuadrupleRecord>(record)?.quadruple()?;
            write_json(out, &TripleOutput::from(&triple(&q)?))?;
        }
        Command::Ptolemy { record, eq_tol } => {
            let q = serde_json::from_str::<QuadrupleRecord>(record)?.quadruple()?;
            write_json(out, &verify(&q, *eq_tol)?)?;
        }
        Command::Sample(args) => match &args.out {
            Some(path) => write_samples(args.spec(), BufWriter::new(File::create(path)?))?,
            None => write_samples(args.spec(), BufWriter::new(&mut *out))?,
        },
        Command::Verify { input, tol, eq_tol, json } => {
            let items = if input.as_os_str() == "-" {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf)?;
                read_records(buf.as_bytes())?
            } else {
                read_records(BufReader::new(File::open(input)?))?
            };
            let report = verify_batch(&items, *tol, *eq_tol)?;
            if *json {
                write_json(out, &report)?;
            } else {
                write_report_text(out, &report)?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS });
        }
        Command::Bergman { z1, z2, w1, w2 } => {
            let z = InteriorPoint::new(parse_complex(z1)?, parse_complex(z2)?)?;
            let w = InteriorPoint::new(parse_complex(w1)?, parse_complex(w2)?)?;
            writeln!(out, "{}", bergman_distance(&z, &w)?)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
