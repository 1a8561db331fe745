//! Generates labeled datasets of each kind and verifies them in batch,
//! as the `sample | verify` command pipeline does.

use chyp::cli::{verify_batch, CliError};
use chyp::sampling::{sample, SampleKind, SampleSpec};
use chyp::tolerance::{EQ_TOL, SLACK_TOL};

fn main() -> Result<(), CliError> {
    for kind in [SampleKind::Generic, SampleKind::Rcircle, SampleKind::Ccircle] {
        let spec = SampleSpec::new(kind, 5_000, 11);
        let items = sample(spec)?
            .map(|r| r.map(|lq| (lq.q, Some(lq.label))))
            .collect::<Result<Vec<_>, _>>()?;
        let report = verify_batch(&items, SLACK_TOL, EQ_TOL)?;
        println!("{kind}: {}", serde_json::to_string(&report)?);
    }
    Ok(())
}
