//! Passing to R/J(R): the graph of the quotient is the shadow of the original,
//! each vertex blown up into a coset of the radical.

use uzgraph::graph::UzGraph;
use uzgraph::invariants::diameter;
use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::{quotient_ring, RingFacts, RingLimits};

fn main() -> uzgraph::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "zn:12".into());
    let limits = RingLimits::default();
    let ring = RingSpec::parse(&spec)?.build(&limits)?;
    let facts = RingFacts::compute(&ring, &limits)?;
    let g = UzGraph::build(&ring, &facts)?;

    let q = quotient_ring(&ring, &facts.jacobson)?;
    let qg = UzGraph::build(&q.ring, &RingFacts::compute(&q.ring, &limits)?)?;

    println!(
        "J({}) = {:?}",
        ring.label(),
        facts.jacobson.members().to_vec()
    );
    println!(
        "{} vertices -> {} cosets",
        g.vertex_count(),
        qg.vertex_count()
    );
    for c in 0..qg.vertex_count() {
        println!("  coset {c}: {:?}", q.fiber(c).to_vec());
    }
    let lifted = g
        .edges()
        .iter()
        .all(|&(u, v)| qg.adjacent(q.project(u), q.project(v)));
    println!("every edge projects to an edge: {lifted}");
    println!("diameter {} vs {}", diameter(&g), diameter(&qg));
    Ok(())
}
