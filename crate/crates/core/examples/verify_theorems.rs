//! Runs the theorem catalogue on a few rings and prints every verdict.
//!
//! ```text
//! cargo run --example verify_theorems -- zn:12 polyq:2:x^2+x+1
//! ```

use uzgraph::invariants::InvariantLimits;
use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::RingLimits;
use uzgraph::theorems::{verify, RingAnalysis};

fn main() -> uzgraph::Result<()> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = vec!["zn:12".into(), "zn:9".into(), "polyq:2:x^2+x+1".into()];
    }
    let limits = RingLimits::default();
    for spec in specs {
        let ring = RingSpec::parse(&spec)?.build(&limits)?;
        let a = RingAnalysis::new(ring, &limits, &InvariantLimits::default())?;
        let report = verify(&a, &limits)?;
        println!(
            "{}: {} passed, {} failed, {} skipped",
            report.ring, report.passed, report.failed, report.skipped
        );
        for check in &report.checks {
            let detail = check.verdict.detail();
            if detail.is_empty() {
                println!("  {:<5} {}", check.verdict.label(), check.id);
            } else {
                println!("  {:<5} {} ({detail})", check.verdict.label(), check.id);
            }
        }
    }
    Ok(())
}
