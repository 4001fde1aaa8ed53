//! Exact exponential searches: Hamiltonian cycles, cliques, colourings,
//! independent sets and dominating sets.
//!
//! The searches work on 64-bit adjacency masks, so the raw solvers accept
//! graphs of at most 64 vertices. The public entry points apply polynomial
//! shortcuts first and report `Skipped` above their vertex limit.

use super::structure::{bipartiteness, complete_bipartite_sides, is_connected, Bipartiteness};
use super::Bounded;
use crate::graph::UzGraph;

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

pub(super) fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn masks_of(g: &UzGraph) -> Vec<u64> {
    g.masks().unwrap_or_else(|| {
        panic!(
            "mask search needs at most 64 vertices, got {}",
            g.vertex_count()
        )
    })
}

/// Whether `g` has a Hamiltonian cycle.
///
/// Decided without search when the graph has fewer than 3 vertices, a vertex
/// of degree below 2, is disconnected, is bipartite with unequal sides, or is
/// `K_{m,n}` (Hamiltonian iff `m = n >= 2`). Otherwise backtracking runs when
/// the graph has at most `limit` vertices.
pub fn is_hamiltonian(g: &UzGraph, limit: usize) -> Bounded<bool> {
    let n = g.vertex_count();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !is_connected(g) {
        return Bounded::Exact(false);
    }
    if let Some((x, y)) = complete_bipartite_sides(g) {
        return Bounded::Exact(x.len() == y.len() && x.len() >= 2);
    }
    if let Bipartiteness::Bipartite(p) = bipartiteness(g) {
        if p.len() == 2 && p.blocks[0].len() != p.blocks[1].len() {
            return Bounded::Exact(false);
        }
    }
    if n > limit.min(64) {
        return Bounded::Skipped { limit };
    }
    // a cycle through every vertex visits at most n/2 of any independent set
    if 2 * maximum_independent_set_size(g) > n {
        return Bounded::Exact(false);
    }
    Bounded::Exact(hamiltonian_cycle(g).is_some())
}

/// A Hamiltonian cycle starting at vertex 0, by plain backtracking with
/// degree and reachability pruning. Needs at most 64 vertices.
pub fn hamiltonian_cycle(g: &UzGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let masks = masks_of(g);
    let mut path = vec![0];
    extend_path(&masks, full_mask(n), bit(0), &mut path).then_some(path)
}

fn extend_path(masks: &[u64], full: u64, visited: u64, path: &mut Vec<usize>) -> bool {
    let end = *path.last().unwrap();
    if visited == full {
        return masks[end] & 1 != 0;
    }
    let open = full & !visited;
    // every open vertex still needs two usable neighbours
    let usable = open | bit(end) | 1;
    if ones(open).any(|w| (masks[w] & usable).count_ones() < 2) {
        return false;
    }
    // the open vertices must hang together off the current end
    let mut reach = masks[end] & open;
    let mut frontier = reach;
    while frontier != 0 {
        let next = ones(frontier).fold(0, |acc, w| acc | masks[w]) & open & !reach;
        reach |= next;
        frontier = next;
    }
    if reach != open {
        return false;
    }
    let mut next: Vec<usize> = ones(masks[end] & open).collect();
    next.sort_by_key(|&w| (masks[w] & open).count_ones());
    for w in next {
        path.push(w);
        if extend_path(masks, full, visited | bit(w), path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Size of a largest clique; bipartite graphs are answered directly.
pub fn clique_number(g: &UzGraph, limit: usize) -> Bounded<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Bounded::Exact(0);
    }
    if bipartiteness(g).is_bipartite() {
        return Bounded::Exact(if g.edge_count() > 0 { 2 } else { 1 });
    }
    if n > limit.min(64) {
        return Bounded::Skipped { limit };
    }
    Bounded::Exact(maximum_clique(g).len())
}

/// A largest clique by branch and bound. Needs at most 64 vertices.
pub fn maximum_clique(g: &UzGraph) -> Vec<usize> {
    let masks = masks_of(g);
    let mut best = Vec::new();
    let mut current = Vec::new();
    grow_clique(&masks, full_mask(g.vertex_count()), &mut current, &mut best);
    best
}

fn grow_clique(
    masks: &[u64],
    mut candidates: u64,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if candidates == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    while candidates != 0 {
        if current.len() + candidates.count_ones() as usize <= best.len() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        current.push(v);
        grow_clique(masks, candidates & masks[v], current, best);
        current.pop();
        candidates &= !bit(v);
    }
    if current.len() > best.len() {
        *best = current.clone();
    }
}

/// Fewest colours in a proper colouring; 1 for edgeless and 2 for bipartite
/// graphs with an edge.
pub fn chromatic_number(g: &UzGraph, limit: usize) -> Bounded<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Bounded::Exact(0);
    }
    if g.edge_count() == 0 {
        return Bounded::Exact(1);
    }
    if bipartiteness(g).is_bipartite() {
        return Bounded::Exact(2);
    }
    if n > limit.min(64) {
        return Bounded::Skipped { limit };
    }
    let colouring = minimum_colouring(g);
    Bounded::Exact(colouring.iter().max().map_or(0, |&c| c + 1))
}

/// An optimal proper colouring (colours `0..k`) by DSATUR branch and bound,
/// seeded with a largest clique as lower bound. Needs at most 64 vertices.
pub fn minimum_colouring(g: &UzGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let masks = masks_of(g);
    let lower = maximum_clique(g).len().max(usize::from(n > 0));
    let mut state = Colouring {
        masks: &masks,
        colour: vec![usize::MAX; n],
        best: (0..n).collect(),
        best_k: n,
        lower,
    };
    state.search(0, 0);
    state.best
}

struct Colouring<'a> {
    masks: &'a [u64],
    colour: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
}

impl Colouring<'_> {
    fn search(&mut self, coloured: usize, used: usize) {
        let n = self.colour.len();
        if used >= self.best_k || self.best_k == self.lower {
            return;
        }
        if coloured == n {
            self.best = self.colour.clone();
            self.best_k = used;
            return;
        }
        // most distinct neighbour colours first, then most uncoloured neighbours
        let mut pick = usize::MAX;
        let mut key = (0, 0);
        for v in (0..n).filter(|&v| self.colour[v] == usize::MAX) {
            let seen = ones(self.masks[v])
                .filter(|&w| self.colour[w] != usize::MAX)
                .fold(0u64, |acc, w| acc | bit(self.colour[w]));
            let free = ones(self.masks[v])
                .filter(|&w| self.colour[w] == usize::MAX)
                .count();
            let k = (seen.count_ones() as usize, free);
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let blocked = ones(self.masks[pick])
            .filter(|&w| self.colour[w] != usize::MAX)
            .fold(0u64, |acc, w| acc | bit(self.colour[w]));
        for c in 0..=used.min(63) {
            if blocked & bit(c) != 0 {
                continue;
            }
            self.colour[pick] = c;
            self.search(coloured + 1, used.max(c + 1));
            self.colour[pick] = usize::MAX;
        }
    }
}

/// Largest independent set size. Bipartite graphs use `n - ν` (König);
/// otherwise a largest clique of the complement.
pub fn independence_number(g: &UzGraph, limit: usize) -> Bounded<usize> {
    if !bipartiteness(g).is_bipartite() && g.vertex_count() > limit.min(64) {
        return Bounded::Skipped { limit };
    }
    Bounded::Exact(maximum_independent_set_size(g))
}

fn maximum_independent_set_size(g: &UzGraph) -> usize {
    match bipartiteness(g) {
        Bipartiteness::Bipartite(p) => {
            let left: Vec<usize> = p.blocks[0].to_vec();
            g.vertex_count() - maximum_matching(g, &left).len()
        }
        Bipartiteness::OddCycle(_) => maximum_clique(&g.complement()).len(),
    }
}

/// A maximum matching of edges leaving `left`, by augmenting paths.
/// Only edges between `left` and the remaining vertices are used.
pub fn maximum_matching(g: &UzGraph, left: &[usize]) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut on_left = vec![false; n];
    for &u in left {
        on_left[u] = true;
    }
    let mut mate = vec![usize::MAX; n];
    for &u in left {
        if let Some(v) = g
            .neighbors(u)
            .find(|&v| !on_left[v] && mate[v] == usize::MAX)
        {
            mate[u] = v;
            mate[v] = u;
        }
    }
    for &u in left {
        if mate[u] == usize::MAX {
            let mut seen = vec![false; n];
            augment(g, u, &on_left, &mut mate, &mut seen);
        }
    }
    let mut out: Vec<(usize, usize)> = left
        .iter()
        .filter(|&&u| mate[u] != usize::MAX)
        .map(|&u| (u, mate[u]))
        .collect();
    out.sort_unstable();
    out
}

fn augment(g: &UzGraph, u: usize, on_left: &[bool], mate: &mut [usize], seen: &mut [bool]) -> bool {
    for v in g.neighbors(u) {
        if on_left[v] || seen[v] {
            continue;
        }
        seen[v] = true;
        if mate[v] == usize::MAX || augment(g, mate[v], on_left, mate, seen) {
            mate[u] = v;
            mate[v] = u;
            return true;
        }
    }
    false
}

/// Smallest dominating set size. Sizes 1 and 2 are tested directly on any
/// graph; larger answers need a search within `limit` vertices.
pub fn domination_number(g: &UzGraph, limit: usize) -> Bounded<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Bounded::Exact(0);
    }
    if (0..n).any(|v| g.degree(v) == n - 1) {
        return Bounded::Exact(1);
    }
    let closed: Vec<_> = (0..n)
        .map(|v| {
            let mut r = g.row(v).clone();
            r.insert(v);
            r
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            let mut cover = closed[u].clone();
            cover.union_with(&closed[v]);
            if cover.count_ones(..) == n {
                return Bounded::Exact(2);
            }
        }
    }
    if n > limit.min(64) {
        return Bounded::Skipped { limit };
    }
    Bounded::Exact(minimum_dominating_set(g).len())
}

/// A smallest dominating set, by increasing the allowed size until a
/// branching search over closed neighbourhoods succeeds. Needs at most 64
/// vertices.
pub fn minimum_dominating_set(g: &UzGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let closed: Vec<u64> = masks_of(g)
        .iter()
        .enumerate()
        .map(|(v, m)| m | bit(v))
        .collect();
    let full = full_mask(n);
    let max_cover = closed
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(1);
    let mut chosen = Vec::new();
    for k in n.div_ceil(max_cover).max(1)..=n {
        if dominate(&closed, full, 0, k, &mut chosen) {
            return chosen;
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn dominate(
    closed: &[u64],
    full: u64,
    covered: u64,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let open = full & !covered;
    if open == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let best_gain = closed
        .iter()
        .map(|m| (m & open).count_ones() as usize)
        .max()
        .unwrap_or(0);
    if best_gain * budget < open.count_ones() as usize {
        return false;
    }
    // the open vertex with fewest ways to be dominated
    let w = ones(open)
        .min_by_key(|&w| closed[w].count_ones())
        .expect("open is nonempty");
    for x in ones(closed[w]) {
        chosen.push(x);
        if dominate(closed, full, covered | closed[x], budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> UzGraph {
        UzGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), format!("C{n}"))
    }

    fn complete(n: usize) -> UzGraph {
        UzGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))), "K")
    }

    fn petersen() -> UzGraph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        UzGraph::from_edges(10, e, "petersen")
    }

    #[test]
    fn petersen_parameters() {
        let g = petersen();
        assert_eq!(is_hamiltonian(&g, 32), Bounded::Exact(false));
        assert_eq!(clique_number(&g, 40), Bounded::Exact(2));
        assert_eq!(chromatic_number(&g, 40), Bounded::Exact(3));
        assert_eq!(independence_number(&g, 40), Bounded::Exact(4));
        assert_eq!(domination_number(&g, 32), Bounded::Exact(3));
    }

    #[test]
    fn cycles_and_complete_graphs() {
        let c7 = cycle(7);
        assert_eq!(chromatic_number(&c7, 40), Bounded::Exact(3));
        assert_eq!(independence_number(&c7, 40), Bounded::Exact(3));
        assert_eq!(domination_number(&c7, 32), Bounded::Exact(3));
        let cyc = hamiltonian_cycle(&c7).unwrap();
        assert_eq!(cyc.len(), 7);
        let k6 = complete(6);
        assert_eq!(clique_number(&k6, 40), Bounded::Exact(6));
        assert_eq!(chromatic_number(&k6, 40), Bounded::Exact(6));
        assert_eq!(domination_number(&k6, 32), Bounded::Exact(1));
    }

    #[test]
    fn limits_produce_skips() {
        let c9 = cycle(9);
        assert_eq!(chromatic_number(&c9, 5), Bounded::Skipped { limit: 5 });
        assert_eq!(is_hamiltonian(&c9, 5), Bounded::Skipped { limit: 5 });
        // C_9 is not bipartite, but its domination number 3 needs the search
        assert_eq!(domination_number(&c9, 5), Bounded::Skipped { limit: 5 });
        let c10 = cycle(10);
        assert_eq!(independence_number(&c10, 5), Bounded::Exact(5));
    }

    #[test]
    fn matching_on_even_path() {
        let p = UzGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)], "P6");
        assert_eq!(maximum_matching(&p, &[0, 2, 4]).len(), 3);
    }

    #[test]
    fn dominating_set_dominates() {
        let g = petersen();
        let d = minimum_dominating_set(&g);
        for v in 0..10 {
            assert!(d.contains(&v) || d.iter().any(|&u| g.adjacent(u, v)));
        }
    }
}
