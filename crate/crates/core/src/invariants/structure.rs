//! Polynomial-time invariants: degrees, connectivity, bipartiteness, distances,
//! short cycles and the structural recognizers.

use std::collections::VecDeque;

use serde::Serialize;

use super::Distance;
use crate::error::{Error, Result};
use crate::graph::{UzGraph, VertexPartition};
use crate::ring::ElementSet;

pub fn degrees(g: &UzGraph) -> Vec<usize> {
    (0..g.vertex_count()).map(|v| g.degree(v)).collect()
}

/// Breadth-first distances from `source`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &UzGraph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &UzGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Connected over the whole vertex set. The one-vertex graph is connected.
pub fn is_connected(g: &UzGraph) -> bool {
    g.vertex_count() == 0 || bfs_distances(g, 0).iter().all(|&d| d != usize::MAX)
}

/// Outcome of a 2-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Bipartiteness {
    /// The colour classes; a class is omitted when empty.
    Bipartite(VertexPartition),
    /// Vertices of an odd cycle in traversal order.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }

    pub fn partition(&self) -> Option<&VertexPartition> {
        match self {
            Bipartiteness::Bipartite(p) => Some(p),
            Bipartiteness::OddCycle(_) => None,
        }
    }
}

/// Breadth-first 2-colouring, component by component; vertex `s` of each
/// new component gets colour 0.
pub fn bipartiteness(g: &UzGraph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if colour[v] == u8::MAX {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if colour[v] == colour[u] {
                    return Bipartiteness::OddCycle(odd_cycle(u, v, &parent, &depth));
                }
            }
        }
    }
    let mut blocks = Vec::new();
    let mut labels = Vec::new();
    for c in 0..2u8 {
        let block = ElementSet::from_elements(n, (0..n).filter(|&v| colour[v] == c));
        if !block.is_empty() {
            blocks.push(block);
            labels.push(if c == 0 { "A" } else { "B" }.to_string());
        }
    }
    Bipartiteness::Bipartite(
        VertexPartition::new(blocks, labels).expect("colour classes partition the vertices"),
    )
}

/// Closes the tree paths from `u` and `v` up to their common ancestor.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
        if a == b {
            break;
        }
    }
    // both lists end at the common ancestor
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub fn is_bipartite(g: &UzGraph) -> bool {
    bipartiteness(g).is_bipartite()
}

/// The two sides `(X, Y)` of a complete bipartite graph, with vertex `0` in
/// `X`. Disconnected graphs and graphs with an empty side are rejected.
pub fn complete_bipartite_sides(g: &UzGraph) -> Option<(ElementSet, ElementSet)> {
    if g.vertex_count() < 2 || !is_connected(g) {
        return None;
    }
    let p = match bipartiteness(g) {
        Bipartiteness::Bipartite(p) if p.len() == 2 => p,
        _ => return None,
    };
    let (x, y) = (&p.blocks[0], &p.blocks[1]);
    (g.edge_count() == x.len() * y.len()).then(|| (x.clone(), y.clone()))
}

pub fn is_complete_bipartite(g: &UzGraph) -> bool {
    complete_bipartite_sides(g).is_some()
}

/// `K_{1, n-1}`, counting `K_1` and `K_2`.
pub fn is_star(g: &UzGraph) -> bool {
    let n = g.vertex_count();
    match n {
        0 => false,
        1 => true,
        _ => g.edge_count() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1),
    }
}

/// Connected and 2-regular on at least 3 vertices.
pub fn is_cycle_graph(g: &UzGraph) -> bool {
    g.vertex_count() >= 3 && (0..g.vertex_count()).all(|v| g.degree(v) == 2) && is_connected(g)
}

/// A path on all vertices, counting `K_1` and `K_2`.
pub fn is_path_graph(g: &UzGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n - 1 || !is_connected(g) {
        return false;
    }
    let ends = (0..n).filter(|&v| g.degree(v) == 1).count();
    let inner = (0..n).filter(|&v| g.degree(v) == 2).count();
    n == 1 || (ends == 2 && inner == n - 2)
}

/// Connected on every vertex, at least one edge, all degrees even.
pub fn is_eulerian(g: &UzGraph) -> bool {
    g.vertex_count() >= 2
        && g.edge_count() > 0
        && (0..g.vertex_count()).all(|v| g.degree(v).is_multiple_of(2))
        && is_connected(g)
}

/// Largest distance between two vertices; infinite when disconnected or
/// when there are fewer than two vertices.
pub fn diameter(g: &UzGraph) -> Distance {
    let n = g.vertex_count();
    if n < 2 {
        return Distance::Infinite;
    }
    let mut best = 0;
    for s in 0..n {
        for d in bfs_distances(g, s) {
            if d == usize::MAX {
                return Distance::Infinite;
            }
            best = best.max(d);
        }
    }
    Distance::Finite(best)
}

/// Length of a shortest cycle, infinite for forests.
pub fn girth(g: &UzGraph) -> Distance {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

/// A triangle `(u, v, w)` with `u < v < w`, smallest first.
pub fn find_c3(g: &UzGraph) -> Option<(usize, usize, usize)> {
    for (u, v) in g.edges() {
        let mut common = g.row(u).clone();
        common.intersect_with(g.row(v));
        if let Some(w) = common.ones().find(|&w| w > v) {
            return Some((u, v, w));
        }
    }
    None
}

pub fn has_c3(g: &UzGraph) -> bool {
    find_c3(g).is_some()
}

/// A 4-cycle `u - a - v - b - u` from two vertices sharing two neighbours.
pub fn find_c4(g: &UzGraph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let mut common = g.row(u).clone();
            common.intersect_with(g.row(v));
            let mut it = common.ones();
            if let (Some(a), Some(b)) = (it.next(), it.next()) {
                return Some([u, a, v, b]);
            }
        }
    }
    None
}

pub fn has_c4(g: &UzGraph) -> bool {
    find_c4(g).is_some()
}

/// Whether `t > sqrt(r) + 1`, decided in integers as `t - 1 > 0` and
/// `(t - 1)^2 > r`.
pub fn kst_c4_condition(t: u64, r: u64) -> bool {
    t > 1 && (t - 1).checked_mul(t - 1).is_none_or(|s| s > r)
}

/// An edge lying inside one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InternalEdge {
    pub u: usize,
    pub v: usize,
    pub block: usize,
}

/// `Ok(None)` when every block is independent, otherwise the first edge
/// found inside a block.
pub fn partition_violation(g: &UzGraph, p: &VertexPartition) -> Result<Option<InternalEdge>> {
    if p.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.vertex_count(),
            g.vertex_count()
        )));
    }
    for (block, members) in p.blocks.iter().enumerate() {
        for u in members.iter() {
            let mut inside = g.row(u).clone();
            inside.intersect_with(members.as_bitset());
            if let Some(v) = inside.ones().find(|&v| v > u) {
                return Ok(Some(InternalEdge { u, v, block }));
            }
        }
    }
    Ok(None)
}

pub fn is_partition_independent(g: &UzGraph, p: &VertexPartition) -> Result<bool> {
    Ok(partition_violation(g, p)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> UzGraph {
        UzGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), format!("C{n}"))
    }

    fn complete_bipartite(a: usize, b: usize) -> UzGraph {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        UzGraph::from_edges(a + b, edges, format!("K{a},{b}"))
    }

    #[test]
    fn recognizers_on_small_graphs() {
        let k1 = UzGraph::from_edges(1, [], "K1");
        assert!(is_star(&k1) && is_path_graph(&k1) && !is_cycle_graph(&k1) && !is_eulerian(&k1));
        let k2 = UzGraph::from_edges(2, [(0, 1)], "K2");
        assert!(is_star(&k2) && is_path_graph(&k2) && is_complete_bipartite(&k2));
        let c5 = cycle(5);
        assert!(is_cycle_graph(&c5) && is_eulerian(&c5) && !is_bipartite(&c5));
        assert!(!is_path_graph(&c5) && !is_star(&c5));
        let p4 = UzGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)], "P4");
        assert!(is_path_graph(&p4) && !is_star(&p4));
        let k16 = complete_bipartite(1, 6);
        assert!(is_star(&k16) && is_complete_bipartite(&k16));
    }

    #[test]
    fn disconnected_graphs_are_not_complete_bipartite_or_eulerian() {
        let g = UzGraph::from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3)], "C4+K1");
        assert!(!is_complete_bipartite(&g));
        assert!(!is_eulerian(&g));
        assert_eq!(diameter(&g), Distance::Infinite);
        assert_eq!(girth(&g), Distance::Finite(4));
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        let g = UzGraph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)],
            "C7",
        );
        let Bipartiteness::OddCycle(c) = bipartiteness(&g) else {
            panic!("C7 is not bipartite");
        };
        assert_eq!(c.len() % 2, 1);
        for i in 0..c.len() {
            assert!(g.adjacent(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn distances() {
        assert_eq!(diameter(&cycle(6)), Distance::Finite(3));
        assert_eq!(girth(&cycle(6)), Distance::Finite(6));
        assert_eq!(girth(&complete_bipartite(3, 6)), Distance::Finite(4));
        assert_eq!(diameter(&complete_bipartite(3, 6)), Distance::Finite(2));
        assert_eq!(girth(&complete_bipartite(1, 6)), Distance::Infinite);
        assert_eq!(
            diameter(&UzGraph::from_edges(1, [], "K1")),
            Distance::Infinite
        );
    }

    #[test]
    fn kst_boundaries() {
        assert!(kst_c4_condition(4, 4));
        assert!(!kst_c4_condition(2, 3));
        assert!(!kst_c4_condition(2, 1));
        assert!(!kst_c4_condition(0, 0));
        assert!(kst_c4_condition(3, 3));
    }

    #[test]
    fn short_cycles() {
        assert_eq!(find_c4(&cycle(4)), Some([0, 1, 2, 3]));
        assert!(!has_c4(&cycle(5)) && !has_c3(&cycle(5)));
        assert_eq!(find_c3(&cycle(3)), Some((0, 1, 2)));
    }
}
