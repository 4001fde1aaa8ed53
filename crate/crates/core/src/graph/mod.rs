//! The unit-zero divisor graph and the vertex partitions used to analyse it.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Element, ElementSet, FiniteRing, Ideal, RingFacts};

pub mod export;

/// Rows below this size are built on the calling thread.
const PARALLEL_THRESHOLD: usize = 256;

/// A simple undirected graph with dense adjacency rows.
///
/// Vertices are `0..n`; for graphs built from a ring they are the ring's
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UzGraph {
    ring_label: String,
    n: usize,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl UzGraph {
    /// `G_UZ(R)`: distinct `u`, `v` are adjacent iff `u + v` is a unit and
    /// `u v` is a zero divisor.
    pub fn build(ring: &FiniteRing, facts: &RingFacts) -> Result<Self> {
        if !facts.describes(ring) {
            return Err(Error::RingMismatch(format!(
                "facts for {} used with {}",
                facts.ring_label,
                ring.label()
            )));
        }
        let n = ring.order();
        let row = |u: Element| {
            let mut bits = FixedBitSet::with_capacity(n);
            for v in 0..n {
                if v != u && facts.is_unit(ring.add(u, v)) && facts.is_zero_divisor(ring.mul(u, v))
                {
                    bits.insert(v);
                }
            }
            bits
        };
        let rows: Vec<FixedBitSet> = if n >= PARALLEL_THRESHOLD {
            (0..n).into_par_iter().map(row).collect()
        } else {
            (0..n).map(row).collect()
        };
        Ok(UzGraph::from_rows(ring.label().to_string(), rows))
    }

    /// Graph on `n` vertices from an edge list. Loops are dropped and
    /// repeated edges collapse.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        label: impl Into<String>,
    ) -> Self {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) outside 0..{n}");
            if u != v {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        UzGraph::from_rows(label.into(), rows)
    }

    fn from_rows(ring_label: String, rows: Vec<FixedBitSet>) -> Self {
        let n = rows.len();
        let degree_sum: usize = rows.iter().map(|r| r.count_ones(..)).sum();
        UzGraph {
            ring_label,
            n,
            rows,
            edge_count: degree_sum / 2,
        }
    }

    pub fn ring_label(&self) -> &str {
        &self.ring_label
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u].ones()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones(..)
    }

    pub fn row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            out.extend(self.rows[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The subgraph induced on `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: &[usize]) -> UzGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect::<Vec<_>>();
        UzGraph::from_edges(keep.len(), edges, self.ring_label.clone())
    }

    pub fn complement(&self) -> UzGraph {
        let rows = (0..self.n)
            .map(|u| {
                let mut r = self.rows[u].clone();
                r.toggle_range(..);
                r.set(u, false);
                r
            })
            .collect();
        UzGraph::from_rows(self.ring_label.clone(), rows)
    }

    /// Adjacency rows as 64-bit masks, available for graphs of at most 64 vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            self.rows
                .iter()
                .map(|r| r.ones().fold(0u64, |m, v| m | (1 << v)))
                .collect()
        })
    }
}

/// Disjoint nonempty blocks covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    pub blocks: Vec<ElementSet>,
    pub labels: Vec<String>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<ElementSet>, labels: Vec<String>) -> Result<Self> {
        if blocks.len() != labels.len() {
            return Err(Error::InvalidPartition(format!(
                "{} blocks but {} labels",
                blocks.len(),
                labels.len()
            )));
        }
        let Some(first) = blocks.first() else {
            return Err(Error::InvalidPartition("no blocks".into()));
        };
        let n = first.universe();
        let mut seen = ElementSet::empty(n);
        for (block, label) in blocks.iter().zip(&labels) {
            if block.universe() != n {
                return Err(Error::InvalidPartition(format!(
                    "block {label} lives on {} vertices, expected {n}",
                    block.universe()
                )));
            }
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {label} is empty")));
            }
            if let Some(x) = block.intersection(&seen).min() {
                return Err(Error::InvalidPartition(format!(
                    "vertex {x} appears twice (again in {label})"
                )));
            }
            seen = seen.union(block);
        }
        if let Some(x) = seen.complement().min() {
            return Err(Error::InvalidPartition(format!(
                "vertex {x} is not covered"
            )));
        }
        Ok(VertexPartition { blocks, labels })
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks[0].universe()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(v))
            .expect("partition covers every vertex")
    }
}

/// `[U(R), I_1, I_2 \ I_1, I_3 \ (I_1 ∪ I_2), ...]` over the maximal ideals
/// `I_1, I_2, ...` in the order `facts` lists them. Empty differences are dropped.
pub fn maximal_ideal_partition(ring: &FiniteRing, facts: &RingFacts) -> Result<VertexPartition> {
    if !facts.describes(ring) {
        return Err(Error::RingMismatch(format!(
            "facts for {} used with {}",
            facts.ring_label,
            ring.label()
        )));
    }
    if facts.maximal_ideals.is_empty() {
        return Err(Error::InvalidRing(format!(
            "{} has no maximal ideals",
            ring.label()
        )));
    }
    let mut blocks = vec![facts.units.clone()];
    let mut labels = vec!["U(R)".to_string()];
    let mut covered = ElementSet::empty(ring.order());
    for m in &facts.maximal_ideals {
        let block = m.members().difference(&covered);
        covered = covered.union(m.members());
        if !block.is_empty() {
            labels.push(ideal_name(ring, m));
            blocks.push(block);
        }
    }
    VertexPartition::new(blocks, labels)
}

/// The cosets `r + I` as blocks.
pub fn coset_blocks(ring: &FiniteRing, ideal: &Ideal) -> Result<VertexPartition> {
    let ideal = Ideal::from_members(ring, ideal.members().clone())?;
    let (blocks, labels) = ideal
        .cosets(ring)
        .into_iter()
        .map(|c| {
            let label = format!("{}+I", ring.element_label(c.representative));
            (c.members, label)
        })
        .unzip();
    VertexPartition::new(blocks, labels)
}

fn ideal_name(ring: &FiniteRing, ideal: &Ideal) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|&g| ring.element_label(g))
        .collect();
    format!("<{}>", gens.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingLimits;

    fn uz(ring: &FiniteRing) -> (RingFacts, UzGraph) {
        let facts = RingFacts::compute(ring, &RingLimits::default()).unwrap();
        let g = UzGraph::build(ring, &facts).unwrap();
        (facts, g)
    }

    #[test]
    fn z6_edges() {
        let (_, g) = uz(&FiniteRing::zn(6).unwrap());
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 5), (1, 4), (2, 3), (2, 5), (3, 4)]
        );
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn z4_is_a_four_cycle() {
        let (_, g) = uz(&FiniteRing::zn(4).unwrap());
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn z3_follows_the_definition() {
        let (_, g) = uz(&FiniteRing::zn(3).unwrap());
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn mismatched_facts_rejected() {
        let z6 = FiniteRing::zn(6).unwrap();
        let facts =
            RingFacts::compute(&FiniteRing::zn(7).unwrap(), &RingLimits::default()).unwrap();
        assert!(matches!(
            UzGraph::build(&z6, &facts),
            Err(Error::RingMismatch(_))
        ));
    }

    #[test]
    fn maximal_partitions() {
        let z15 = FiniteRing::zn(15).unwrap();
        let (f, _) = uz(&z15);
        let p = maximal_ideal_partition(&z15, &f).unwrap();
        let blocks: Vec<_> = p.blocks.iter().map(|b| b.to_vec()).collect();
        assert_eq!(
            blocks,
            vec![
                vec![1, 2, 4, 7, 8, 11, 13, 14],
                vec![0, 3, 6, 9, 12],
                vec![5, 10]
            ]
        );
        assert_eq!(p.labels, vec!["U(R)", "<3>", "<5>"]);

        let z30 = FiniteRing::zn(30).unwrap();
        let (f, _) = uz(&z30);
        let sizes: Vec<_> = maximal_ideal_partition(&z30, &f)
            .unwrap()
            .blocks
            .iter()
            .map(|b| b.len())
            .collect();
        assert_eq!(sizes, vec![8, 15, 5, 2]);

        let z1 = FiniteRing::zn(1).unwrap();
        let (f, _) = uz(&z1);
        assert!(maximal_ideal_partition(&z1, &f).is_err());
    }

    #[test]
    fn cosets_as_blocks() {
        let z12 = FiniteRing::zn(12).unwrap();
        let j = Ideal::principal(&z12, 6);
        let p = coset_blocks(&z12, &j).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.blocks.iter().all(|b| b.len() == 2));
        assert_eq!(p.block_of(8), 2);
        assert_eq!(coset_blocks(&z12, &Ideal::zero(&z12)).unwrap().len(), 12);
    }

    #[test]
    fn partition_validation() {
        let a = ElementSet::from_elements(4, [0, 1]);
        let b = ElementSet::from_elements(4, [1, 2, 3]);
        let err = VertexPartition::new(vec![a.clone(), b], vec!["a".into(), "b".into()]);
        assert!(matches!(err, Err(Error::InvalidPartition(_))));
        let short = VertexPartition::new(vec![a], vec!["a".into()]);
        assert!(matches!(short, Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn complement_and_induced() {
        let g = UzGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)], "p4");
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.masks().unwrap(), vec![0b0010, 0b0101, 0b1010, 0b0100]);
    }
}
