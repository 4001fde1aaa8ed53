//! Builds a unit-zero divisor graph and prints it as DOT, CSV and JSON.
//!
//! ```text
//! cargo run --example build_graph -- zn:9 | dot -Tsvg > z9.svg
//! ```

use std::io::{stdout, Write};

use uzgraph::graph::export::{write_csv, write_dot, write_json, VertexLabels};
use uzgraph::graph::UzGraph;
use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::{RingFacts, RingLimits};

fn main() -> uzgraph::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "zn:6".into());
    let limits = RingLimits::default();
    let ring = RingSpec::parse(&spec)?.build(&limits)?;
    let facts = RingFacts::compute(&ring, &limits)?;
    let g = UzGraph::build(&ring, &facts)?;

    let mut out = stdout().lock();
    write_dot(&mut out, &g, Some(&ring), VertexLabels::Residues)?;

    let mut csv = Vec::new();
    write_csv(&mut csv, &g)?;
    let mut json = Vec::new();
    write_json(&mut json, &g)?;
    writeln!(
        out,
        "// {} edges, {} bytes of CSV, {} bytes of JSON",
        g.edge_count(),
        csv.len(),
        json.len()
    )?;

    // u ~ v  iff  u + v is a unit and u v is a zero divisor
    if let Some((u, v)) = g.edges().first().copied() {
        writeln!(
            out,
            "// first edge {u} -- {v}: sum {} is a unit, product {} is a zero divisor",
            ring.element_label(ring.add(u, v)),
            ring.element_label(ring.mul(u, v))
        )?;
    }
    Ok(())
}
