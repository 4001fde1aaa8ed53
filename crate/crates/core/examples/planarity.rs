//! Planarity of small ring graphs, decided twice: by the left-right criterion
//! and by a direct search for a Kuratowski subdivision.

use uzgraph::graph::UzGraph;
use uzgraph::invariants::{is_planar, is_planar_by_subdivision, SUBDIVISION_STEP_BUDGET};
use uzgraph::ring::{FiniteRing, RingFacts, RingLimits};

fn main() -> uzgraph::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(40);
    let mut planar = Vec::new();
    for n in 1..=max {
        let ring = FiniteRing::zn(n)?;
        let g = UzGraph::build(&ring, &RingFacts::compute(&ring, &RingLimits::default())?)?;
        let lr = is_planar(&g);
        let sub = is_planar_by_subdivision(&g, 64, SUBDIVISION_STEP_BUDGET);
        assert_eq!(sub.exact().unwrap_or(lr), lr, "Z_{n}");
        if lr {
            planar.push(n);
        }
    }
    println!("planar for n in {planar:?}");

    let k33 = UzGraph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))), "K3,3");
    println!("K3,3 planar: {}", is_planar(&k33));
    Ok(())
}
