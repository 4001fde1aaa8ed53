//! Planarity: the left-right depth-first criterion, plus an independent
//! search for subdivisions of `K_5` and `K_{3,3}` used to cross-check it.

use fixedbitset::FixedBitSet;

use super::search::ones;
use super::structure::{is_bipartite, is_cycle_graph};
use super::Bounded;
use crate::graph::UzGraph;

/// Exact planarity decision.
pub fn is_planar(g: &UzGraph) -> bool {
    let v = g.vertex_count();
    let e = g.edge_count();
    if v <= 4 || is_forest(g) || is_cycle_graph(g) {
        return true;
    }
    if e > 3 * v - 6 || (e > 2 * v - 4 && is_bipartite(g)) {
        return false;
    }
    LrPlanarity::new(g).run()
}

fn is_forest(g: &UzGraph) -> bool {
    let comps = super::structure::components(g).len();
    g.edge_count() + comps == g.vertex_count()
}

#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn edge(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// State of the left-right planarity test on one graph. Edges are oriented
/// by a depth-first search and numbered in the order they are oriented.
struct LrPlanarity<'a> {
    g: &'a UzGraph,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    oriented: Vec<FixedBitSet>,
    source: Vec<usize>,
    target: Vec<usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    reference: Vec<Option<usize>>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

const UNSET: usize = usize::MAX;

impl<'a> LrPlanarity<'a> {
    fn new(g: &'a UzGraph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        LrPlanarity {
            g,
            height: vec![UNSET; n],
            parent_edge: vec![None; n],
            oriented: vec![FixedBitSet::with_capacity(n); n],
            source: Vec::with_capacity(m),
            target: Vec::with_capacity(m),
            out: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting: Vec::with_capacity(m),
            reference: vec![None; m],
            lowpt_edge: vec![UNSET; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let n = self.g.vertex_count();
        let mut roots = Vec::new();
        for v in 0..n {
            if self.height[v] == UNSET {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let nesting = &self.nesting;
            self.out[v].sort_by_key(|&e| nesting[e]);
        }
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let neighbours: Vec<usize> = self.g.neighbors(v).collect();
        for w in neighbours {
            if self.oriented[v].contains(w) {
                continue;
            }
            self.oriented[v].insert(w);
            self.oriented[w].insert(v);
            let vw = self.source.len();
            self.source.push(v);
            self.target.push(w);
            self.out[v].push(vw);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting.push(0);
            if self.height[w] == UNSET {
                self.parent_edge[w] = Some(vw);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] + usize::from(self.lowpt2[vw] < self.height[v]);
            if let Some(e) = parent {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => UNSET,
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let edges = self.out[v].clone();
        for (i, &ei) in edges.iter().enumerate() {
            let w = self.target[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::edge(ei),
                });
            }
            if self.lowpt[ei] < self.height[v] {
                let e = parent.expect("a return edge below the root is impossible");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are stacked");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(low) = p.left.low {
                self.reference[low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.source[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.target[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.target[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }
}

/// Planarity by searching for a subdivision of `K_5` or `K_{3,3}`.
///
/// Vertices of degree at most one are deleted and degree-two vertices are
/// suppressed until every vertex has degree at least three; then branch
/// vertices are chosen and the required internally disjoint paths routed by
/// exhaustive backtracking. A subdivision inside a minor obtained by
/// contracting matchings is looked for first, since it already rules out
/// planarity. Graphs with more than `limit` vertices are skipped, as are
/// searches exceeding `step_budget` path extensions.
pub fn is_planar_by_subdivision(g: &UzGraph, limit: usize, step_budget: u64) -> Bounded<bool> {
    if g.vertex_count() > limit.min(64) {
        return Bounded::Skipped { limit };
    }
    let reduced = reduce_masks(g.masks().expect("at most 64 vertices"));
    if minor_has_subdivision(&reduced, step_budget) {
        return Bounded::Exact(false);
    }
    let mut search = SubdivisionSearch {
        adj: reduced,
        hops: 0,
        steps: 0,
        budget: step_budget,
    };
    match search.find() {
        Some(found) => Bounded::Exact(!found),
        None => Bounded::Skipped { limit },
    }
}

/// Contracts greedy matchings until at most `SMALL_MINOR` vertices remain,
/// then searches that minor exhaustively.
fn minor_has_subdivision(adj: &[u64], step_budget: u64) -> bool {
    let mut adj = adj.to_vec();
    let active = |adj: &[u64]| adj.iter().filter(|m| **m != 0).count();
    if active(&adj) <= SMALL_MINOR {
        return false;
    }
    while active(&adj) > SMALL_MINOR {
        let before = active(&adj);
        let mut matched = 0u64;
        for v in 0..adj.len() {
            if adj[v] == 0 || matched & (1 << v) != 0 {
                continue;
            }
            let Some(w) = ones(adj[v] & !matched).min_by_key(|&w| adj[w].count_ones()) else {
                continue;
            };
            contract(&mut adj, v, w);
            matched |= (1 << v) | (1 << w);
            if active(&adj) <= SMALL_MINOR {
                break;
            }
        }
        adj = reduce_masks(adj);
        if active(&adj) == before {
            break;
        }
    }
    let mut search = SubdivisionSearch {
        adj,
        hops: 0,
        steps: 0,
        budget: step_budget,
    };
    search.find() == Some(true)
}

const SMALL_MINOR: usize = 16;

/// Merges `w` into its neighbour `v`.
fn contract(adj: &mut [u64], v: usize, w: usize) {
    let moved = adj[w] & !(1 << v);
    adj[w] = 0;
    adj[v] = (adj[v] | moved) & !(1 << w) & !(1 << v);
    for x in ones(moved) {
        adj[x] = (adj[x] & !(1 << w)) | (1 << v);
    }
}

/// Removes low-degree vertices and suppresses degree-two vertices, keeping
/// the graph simple. Masks keep the original numbering.
fn reduce_masks(mut adj: Vec<u64>) -> Vec<u64> {
    loop {
        let mut changed = false;
        for v in 0..adj.len() {
            let d = adj[v].count_ones();
            if d == 0 {
                continue;
            }
            if d == 1 {
                let w = adj[v].trailing_zeros() as usize;
                adj[w] &= !(1 << v);
                adj[v] = 0;
                changed = true;
            } else if d == 2 {
                let a = adj[v].trailing_zeros() as usize;
                let b = 63 - adj[v].leading_zeros() as usize;
                adj[a] &= !(1 << v);
                adj[b] &= !(1 << v);
                adj[v] = 0;
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                changed = true;
            }
        }
        if !changed {
            return adj;
        }
    }
}

struct SubdivisionSearch {
    adj: Vec<u64>,
    hops: usize,
    steps: u64,
    budget: u64,
}

impl SubdivisionSearch {
    /// `Some(true)` if a Kuratowski subdivision exists, `None` if the step
    /// budget ran out first. Short paths are tried before long ones.
    fn find(&mut self) -> Option<bool> {
        let longest = self.adj.len();
        for hops in [0, 1, 2, longest] {
            self.hops = hops;
            if self.find_within()? {
                return Some(true);
            }
        }
        Some(false)
    }

    fn find_within(&mut self) -> Option<bool> {
        let with_degree = |d: u32| -> Vec<usize> {
            (0..self.adj.len())
                .filter(|&v| self.adj[v].count_ones() >= d)
                .collect()
        };
        let cubic = with_degree(3);
        let quartic = with_degree(4);

        let mut sixes = Combinations::new(cubic.len(), 6);
        while let Some(c) = sixes.next() {
            let six: Vec<usize> = c.iter().map(|&i| cubic[i]).collect();
            // the smallest branch vertex always sits on side A
            let mut splits = Combinations::new(5, 2);
            while let Some(s) = splits.next() {
                let a = [six[0], six[1 + s[0]], six[1 + s[1]]];
                let pairs: Vec<(usize, usize)> = a
                    .iter()
                    .flat_map(|&x| six.iter().filter(|v| !a.contains(v)).map(move |&y| (x, y)))
                    .collect();
                if self.route(&six, &pairs)? {
                    return Some(true);
                }
            }
        }
        let mut fives = Combinations::new(quartic.len(), 5);
        while let Some(c) = fives.next() {
            let five: Vec<usize> = c.iter().map(|&i| quartic[i]).collect();
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .map(|(i, j)| (five[i], five[j]))
                .collect();
            if self.route(&five, &pairs)? {
                return Some(true);
            }
        }
        Some(false)
    }

    /// Tries to connect every pair by internally disjoint paths avoiding the
    /// other branch vertices.
    fn route(&mut self, branch: &[usize], pairs: &[(usize, usize)]) -> Option<bool> {
        let branch_mask = branch.iter().fold(0u64, |m, &v| m | (1 << v));
        let free = self
            .adj
            .iter()
            .enumerate()
            .filter(|(_, m)| **m != 0)
            .fold(0u64, |m, (v, _)| m | (1 << v))
            & !branch_mask;
        self.route_from(pairs, free)
    }

    fn route_from(&mut self, pairs: &[(usize, usize)], free: u64) -> Option<bool> {
        let Some(&(x, y)) = pairs.first() else {
            return Some(true);
        };
        // every remaining pair must still be connectable
        for &(a, b) in pairs {
            if !self.reachable(a, b, free) {
                return Some(false);
            }
        }
        self.paths(x, y, free, self.hops, &pairs[1..])
    }

    fn reachable(&self, a: usize, b: usize, free: u64) -> bool {
        if self.adj[a] & (1 << b) != 0 {
            return true;
        }
        let mut seen = self.adj[a] & free;
        let mut frontier = seen;
        while frontier != 0 {
            if ones(frontier).any(|v| self.adj[v] & (1 << b) != 0) {
                return true;
            }
            let next = ones(frontier).fold(0u64, |m, v| m | self.adj[v]) & free & !seen;
            seen |= next;
            frontier = next;
        }
        false
    }

    /// Enumerates simple paths from `at` to `goal` through at most `hops`
    /// `free` vertices, continuing with `rest` after each.
    fn paths(
        &mut self,
        at: usize,
        goal: usize,
        free: u64,
        hops: usize,
        rest: &[(usize, usize)],
    ) -> Option<bool> {
        self.steps += 1;
        if self.steps > self.budget {
            return None;
        }
        if self.adj[at] & (1 << goal) != 0 && self.route_from(rest, free)? {
            return Some(true);
        }
        if hops == 0 {
            return Some(false);
        }
        for next in ones(self.adj[at] & free) {
            if self.paths(next, goal, free & !(1 << next), hops - 1, rest)? {
                return Some(true);
            }
        }
        Some(false)
    }
}

/// `k`-subsets of `0..n` as increasing index lists, in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if !self.started {
            self.started = true;
            return (k <= self.n).then_some(&self.idx[..]);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

#[cfg(test)]
fn edge_set(g: &UzGraph) -> std::collections::BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}
