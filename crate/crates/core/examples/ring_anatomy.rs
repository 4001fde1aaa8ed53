//! Units, zero divisors, ideals and the Jacobson radical of a ring.
//!
//! ```text
//! cargo run --example ring_anatomy -- prod:zn:4,zn:3
//! ```

use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::{RingFacts, RingLimits};

fn main() -> uzgraph::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "zn:12".into());
    let limits = RingLimits::default();
    let ring = RingSpec::parse(&spec)?.build(&limits)?;
    let facts = RingFacts::compute(&ring, &limits)?;

    let show = |xs: Vec<usize>| {
        xs.iter()
            .map(|&x| ring.element_label(x))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("{} has {} elements", ring.label(), ring.order());
    println!("units          {}", show(facts.units.to_vec()));
    println!("zero divisors  {}", show(facts.zero_divisors.to_vec()));
    println!("{} ideals:", facts.ideals.len());
    for ideal in &facts.ideals {
        let tag = if facts.maximal_ideals.contains(ideal) {
            "  maximal"
        } else {
            ""
        };
        println!(
            "  ({:>3} elements) generated by {}{tag}",
            ideal.len(),
            show(ideal.generators().to_vec())
        );
    }
    println!(
        "Jacobson radical {}",
        show(facts.jacobson.members().to_vec())
    );
    println!("local: {}, field: {}", facts.is_local, facts.is_field);
    Ok(())
}
