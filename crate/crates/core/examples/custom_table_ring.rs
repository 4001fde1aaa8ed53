//! A ring given only by Cayley tables: Z_2[x, y]/(x^2, xy, y^2), which has no
//! single-variable presentation. Element `a + b x + c y` is stored as `a + 2b + 4c`.

use std::path::Path;

use uzgraph::invariants::InvariantLimits;
use uzgraph::ring::spec::load_table_rings;
use uzgraph::ring::RingLimits;
use uzgraph::theorems::{verify, RingAnalysis};

fn main() -> uzgraph::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/z2xy.json");
    let limits = RingLimits::default();
    for ring in load_table_rings(&path)? {
        let a = RingAnalysis::new(ring, &limits, &InvariantLimits::default())?;
        println!("{} (order {})", a.ring.label(), a.ring.order());
        println!("  units {:?}", a.facts.units.to_vec());
        println!(
            "  maximal ideal {:?}",
            a.facts.maximal_ideals[0].members().to_vec()
        );
        println!(
            "  complete bipartite sides {:?}",
            a.invariants.complete_bipartite_sizes
        );
        let report = verify(&a, &limits)?;
        println!(
            "  {} passed, {} failed, {} skipped",
            report.passed, report.failed, report.skipped
        );
    }
    Ok(())
}
