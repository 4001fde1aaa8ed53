//! Graph invariants of unit-zero divisor graphs.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{UzGraph, VertexPartition};

mod planarity;
mod search;
mod structure;

pub use planarity::{is_planar, is_planar_by_subdivision};
pub use search::{
    chromatic_number, clique_number, domination_number, hamiltonian_cycle, independence_number,
    is_hamiltonian, maximum_clique, maximum_matching, minimum_colouring, minimum_dominating_set,
};
pub use structure::{
    bfs_distances, bipartiteness, complete_bipartite_sides, components, degrees, diameter, find_c3,
    find_c4, girth, has_c3, has_c4, is_bipartite, is_complete_bipartite, is_connected,
    is_cycle_graph, is_eulerian, is_partition_independent, is_path_graph, is_star,
    kst_c4_condition, partition_violation, Bipartiteness, InternalEdge,
};

/// Step budget for the subdivision search inside [`analyze`].
pub const SUBDIVISION_STEP_BUDGET: u64 = 20_000_000;

/// An exact answer, or a note that the search was not attempted because the
/// graph exceeded a vertex limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bounded<T> {
    Exact(T),
    Skipped { limit: usize },
}

impl<T: Copy> Bounded<T> {
    pub fn exact(&self) -> Option<T> {
        match self {
            Bounded::Exact(v) => Some(*v),
            Bounded::Skipped { .. } => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Bounded::Skipped { .. })
    }
}

/// Skipped values serialize as `null`.
impl<T: Serialize> Serialize for Bounded<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bounded::Exact(v) => v.serialize(s),
            Bounded::Skipped { .. } => s.serialize_none(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Bounded<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(v) => v.fmt(f),
            Bounded::Skipped { limit } => write!(f, "skipped({limit})"),
        }
    }
}

/// A path length that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

/// Finite values serialize as numbers, infinity as `"inf"`.
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => d.fmt(f),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Largest vertex count for which each exponential search runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantLimits {
    pub hamiltonian: usize,
    pub clique: usize,
    pub chromatic: usize,
    pub independence: usize,
    pub domination: usize,
    pub planarity_subdivision: usize,
}

impl Default for InvariantLimits {
    fn default() -> Self {
        InvariantLimits {
            hamiltonian: 32,
            clique: 40,
            chromatic: 40,
            independence: 40,
            domination: 32,
            planarity_subdivision: 64,
        }
    }
}

/// Every invariant of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub ring: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_regular: bool,
    pub connected: bool,
    pub diameter: Distance,
    pub girth: Distance,
    pub is_bipartite: bool,
    pub bipartition: Option<VertexPartition>,
    pub is_complete_bipartite: bool,
    /// Side sizes `(|X|, |Y|)` with vertex 0 in `X`.
    pub complete_bipartite_sizes: Option<(usize, usize)>,
    pub is_star: bool,
    pub is_cycle_graph: bool,
    pub is_path_graph: bool,
    pub is_eulerian: bool,
    pub is_planar: bool,
    pub planar_by_subdivision: Bounded<bool>,
    pub is_hamiltonian: Bounded<bool>,
    pub clique_number: Bounded<usize>,
    pub chromatic_number: Bounded<usize>,
    pub independence_number: Bounded<usize>,
    pub domination_number: Bounded<usize>,
    pub has_c3: bool,
    pub has_c4: bool,
    /// Names of the fields left `null` by a vertex limit.
    pub skipped: Vec<&'static str>,
}

pub fn analyze(g: &UzGraph, limits: &InvariantLimits) -> InvariantReport {
    let degree_sequence = degrees(g);
    let max_degree = degree_sequence.iter().copied().max().unwrap_or(0);
    let min_degree = degree_sequence.iter().copied().min().unwrap_or(0);
    let bip = bipartiteness(g);
    let sides = complete_bipartite_sides(g);
    let planar_by_subdivision = if g.vertex_count() <= limits.planarity_subdivision.min(64) {
        is_planar_by_subdivision(g, limits.planarity_subdivision, SUBDIVISION_STEP_BUDGET)
    } else {
        Bounded::Skipped {
            limit: limits.planarity_subdivision,
        }
    };
    let mut report = InvariantReport {
        ring: g.ring_label().to_string(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        max_degree,
        min_degree,
        is_regular: max_degree == min_degree,
        degree_sequence,
        connected: is_connected(g),
        diameter: diameter(g),
        girth: girth(g),
        is_bipartite: bip.is_bipartite(),
        bipartition: bip.partition().cloned(),
        is_complete_bipartite: sides.is_some(),
        complete_bipartite_sizes: sides.map(|(x, y)| (x.len(), y.len())),
        is_star: is_star(g),
        is_cycle_graph: is_cycle_graph(g),
        is_path_graph: is_path_graph(g),
        is_eulerian: is_eulerian(g),
        is_planar: is_planar(g),
        planar_by_subdivision,
        is_hamiltonian: is_hamiltonian(g, limits.hamiltonian),
        clique_number: clique_number(g, limits.clique),
        chromatic_number: chromatic_number(g, limits.chromatic),
        independence_number: independence_number(g, limits.independence),
        domination_number: domination_number(g, limits.domination),
        has_c3: has_c3(g),
        has_c4: has_c4(g),
        skipped: Vec::new(),
    };
    let r = &report;
    report.skipped = [
        (
            "planar_by_subdivision",
            r.planar_by_subdivision.is_skipped(),
        ),
        ("is_hamiltonian", r.is_hamiltonian.is_skipped()),
        ("clique_number", r.clique_number.is_skipped()),
        ("chromatic_number", r.chromatic_number.is_skipped()),
        ("independence_number", r.independence_number.is_skipped()),
        ("domination_number", r.domination_number.is_skipped()),
    ]
    .into_iter()
    .filter_map(|(name, skipped)| skipped.then_some(name))
    .collect();
    report
}

impl InvariantReport {
    pub const CSV_HEADER: [&'static str; 25] = [
        "ring",
        "vertices",
        "edges",
        "max_degree",
        "min_degree",
        "regular",
        "connected",
        "diameter",
        "girth",
        "bipartite",
        "complete_bipartite",
        "star",
        "cycle",
        "path",
        "eulerian",
        "planar",
        "planar_by_subdivision",
        "hamiltonian",
        "clique",
        "chromatic",
        "independence",
        "domination",
        "c3",
        "c4",
        "skipped",
    ];

    /// One row matching [`Self::CSV_HEADER`]; skipped values are empty and
    /// named in the last column.
    pub fn csv_row(&self) -> Vec<String> {
        fn b<T: fmt::Display>(v: &Bounded<T>) -> String {
            match v {
                Bounded::Exact(x) => x.to_string(),
                Bounded::Skipped { .. } => String::new(),
            }
        }
        vec![
            self.ring.clone(),
            self.vertex_count.to_string(),
            self.edge_count.to_string(),
            self.max_degree.to_string(),
            self.min_degree.to_string(),
            self.is_regular.to_string(),
            self.connected.to_string(),
            self.diameter.to_string(),
            self.girth.to_string(),
            self.is_bipartite.to_string(),
            self.is_complete_bipartite.to_string(),
            self.is_star.to_string(),
            self.is_cycle_graph.to_string(),
            self.is_path_graph.to_string(),
            self.is_eulerian.to_string(),
            self.is_planar.to_string(),
            b(&self.planar_by_subdivision),
            b(&self.is_hamiltonian),
            b(&self.clique_number),
            b(&self.chromatic_number),
            b(&self.independence_number),
            b(&self.domination_number),
            self.has_c3.to_string(),
            self.has_c4.to_string(),
            self.skipped.join(";"),
        ]
    }
}
