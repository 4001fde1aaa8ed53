//! A parallel sweep over a ring family, summarised as CSV.
//!
//! ```text
//! cargo run --release --example sweep -- prime-powers 2 128
//! ```

use uzgraph::theorems::{sweep, SweepFamily, SweepOptions, SUMMARY_HEADER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family = match args.split_first() {
        Some((name, rest)) => SweepFamily::parse(name, rest)?,
        None => SweepFamily::Zn { lo: 2, hi: 60 },
    };
    let rows = sweep(&family, &SweepOptions::default())?;

    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(SUMMARY_HEADER)?;
    for row in &rows {
        out.write_record(row.summary())?;
    }
    out.flush()?;

    let failed: usize = rows.iter().map(|r| r.theorems.failed).sum();
    eprintln!("{} rings, {failed} failed checks", rows.len());
    Ok(())
}
