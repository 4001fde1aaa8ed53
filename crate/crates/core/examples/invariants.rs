//! Every invariant of a graph, with exponential searches marked when skipped.
//!
//! ```text
//! cargo run --example invariants -- zn:30
//! ```

use uzgraph::graph::UzGraph;
use uzgraph::invariants::{analyze, Bounded, InvariantLimits};
use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::{RingFacts, RingLimits};

fn show<T: std::fmt::Display + Copy>(b: Bounded<T>) -> String {
    match b {
        Bounded::Exact(v) => v.to_string(),
        Bounded::Skipped { limit } => format!("skipped (more than {limit} vertices)"),
    }
}

fn main() -> uzgraph::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "zn:15".into());
    let limits = RingLimits::default();
    let ring = RingSpec::parse(&spec)?.build(&limits)?;
    let g = UzGraph::build(&ring, &RingFacts::compute(&ring, &limits)?)?;
    let r = analyze(&g, &InvariantLimits::default());

    println!(
        "{}: {} vertices, {} edges",
        r.ring, r.vertex_count, r.edge_count
    );
    println!(
        "degrees {}..{}, regular {}",
        r.min_degree, r.max_degree, r.is_regular
    );
    println!("diameter {}, girth {}", r.diameter, r.girth);
    println!(
        "bipartite {}, complete bipartite {:?}",
        r.is_bipartite, r.complete_bipartite_sizes
    );
    println!(
        "star {}, cycle {}, path {}",
        r.is_star, r.is_cycle_graph, r.is_path_graph
    );
    println!("eulerian {}, planar {}", r.is_eulerian, r.is_planar);
    println!("hamiltonian   {}", show(r.is_hamiltonian));
    println!("clique        {}", show(r.clique_number));
    println!("chromatic     {}", show(r.chromatic_number));
    println!("independence  {}", show(r.independence_number));
    println!("domination    {}", show(r.domination_number));
    println!("triangle {}, 4-cycle {}", r.has_c3, r.has_c4);
    Ok(())
}
