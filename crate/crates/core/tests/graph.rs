use std::collections::BTreeSet;

use proptest::prelude::*;
use uzgraph::graph::export::{read_csv_edges, write_csv, write_dot, write_json, VertexLabels};
use uzgraph::graph::{coset_blocks, maximal_ideal_partition, UzGraph};
use uzgraph::invariants::is_partition_independent;
use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::{quotient_ring, FiniteRing, RingFacts, RingLimits};

fn build(spec: &str) -> (FiniteRing, RingFacts, UzGraph) {
    let r = RingSpec::parse(spec)
        .unwrap()
        .build(&RingLimits::default())
        .unwrap();
    let f = RingFacts::compute(&r, &RingLimits::default()).unwrap();
    let g = UzGraph::build(&r, &f).unwrap();
    (r, f, g)
}

fn edge_set(edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

const Z6_EDGES: [(usize, usize); 6] = [(0, 1), (0, 5), (1, 4), (2, 3), (2, 5), (3, 4)];

#[rustfmt::skip]
const Z12_EDGES: [(usize, usize); 24] = [
    (0, 1), (0, 5), (0, 7), (0, 11),
    (1, 4), (1, 6), (1, 10),
    (2, 3), (2, 5), (2, 9), (2, 11),
    (3, 4), (3, 8), (3, 10),
    (4, 7), (4, 9), (5, 6), (5, 8),
    (6, 7), (6, 11), (7, 10),
    (8, 9), (8, 11), (9, 10),
];

#[test]
fn z6_edge_set() {
    let (_, _, g) = build("zn:6");
    assert_eq!(edge_set(&g.edges()), edge_set(&Z6_EDGES));
}

#[test]
fn z3_follows_the_definition() {
    let (_, _, g) = build("zn:3");
    assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    // the drawn version 0-1-2 is also a path on three vertices
    let drawn = UzGraph::from_edges(3, [(0, 1), (1, 2)], "drawn");
    let mut a: Vec<usize> = (0..3).map(|v| g.degree(v)).collect();
    let mut b: Vec<usize> = (0..3).map(|v| drawn.degree(v)).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn z9_is_k36() {
    let (_, _, g) = build("zn:9");
    assert_eq!(g.edge_count(), 18);
    let ideal = [0, 3, 6];
    for u in 0..9 {
        for v in u + 1..9 {
            let across = ideal.contains(&u) != ideal.contains(&v);
            assert_eq!(g.adjacent(u, v), across, "{u} {v}");
        }
    }
}

#[test]
fn z12_edge_set_and_its_quotient() {
    let (r, f, g) = build("zn:12");
    assert_eq!(edge_set(&g.edges()), edge_set(&Z12_EDGES));
    assert!((0..12).all(|v| g.degree(v) == 4));
    assert_eq!(f.jacobson.members().to_vec(), vec![0, 6]);

    let q = quotient_ring(&r, &f.jacobson).unwrap();
    let qf = RingFacts::compute(&q.ring, &RingLimits::default()).unwrap();
    let qg = UzGraph::build(&q.ring, &qf).unwrap();
    let residue = |c: usize| q.representatives[c];
    let image: Vec<(usize, usize)> = qg
        .edges()
        .iter()
        .map(|&(a, b)| (residue(a), residue(b)))
        .collect();
    assert_eq!(edge_set(&image), edge_set(&Z6_EDGES));
    for (u, v) in g.edges() {
        assert!(qg.adjacent(q.project(u), q.project(v)), "{u} -- {v}");
    }
    for c in 0..6 {
        assert_eq!(q.fiber(c).to_vec(), vec![residue(c), residue(c) + 6]);
    }
}

#[test]
fn adjacency_matches_residue_arithmetic() {
    for n in 2..=60 {
        let (_, _, g) = build(&format!("zn:{n}"));
        for x in 0..n {
            for y in 0..n {
                let want = x != y && gcd((x + y) % n, n) == 1 && gcd(x * y % n, n) != 1;
                assert_eq!(g.adjacent(x, y), want, "Z_{n}: {x} {y}");
            }
        }
    }
}

#[test]
fn trivial_ring_is_one_vertex() {
    let (_, _, g) = build("zn:1");
    assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    let mut dot = Vec::new();
    write_dot(&mut dot, &g, None, VertexLabels::Index).unwrap();
    assert_eq!(
        String::from_utf8(dot).unwrap(),
        "graph G {\n  // zn:1\n  0;\n}\n"
    );
}

#[test]
fn exports_round_trip() {
    let (r, _, g) = build("prod:zn:3,zn:4");
    let mut csv = Vec::new();
    write_csv(&mut csv, &g).unwrap();
    assert_eq!(read_csv_edges(&csv[..]).unwrap(), g.edges());

    let mut json = Vec::new();
    write_json(&mut json, &g).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert_eq!(v["ring"], "prod:zn:3,zn:4");
    assert_eq!(v["edge_count"], g.edge_count());
    let adjacency = v["adjacency"].as_array().unwrap();
    for (u, row) in adjacency.iter().enumerate() {
        let row: Vec<usize> = row
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .collect();
        assert_eq!(row, g.neighbors(u).collect::<Vec<_>>());
    }

    let mut dot = Vec::new();
    write_dot(&mut dot, &g, Some(&r), VertexLabels::Residues).unwrap();
    let dot = String::from_utf8(dot).unwrap();
    assert_eq!(dot.matches(" -- ").count(), g.edge_count());
    assert_eq!(dot.matches("[label=").count(), 12);
    assert!(dot.contains("  11 [label=\"(2,3)\"];"));
}

#[test]
fn maximal_ideal_blocks_are_independent() {
    for spec in [
        "zn:15",
        "zn:30",
        "zn:210",
        "prod:zn:2,zn:3,zn:5",
        "prod:polyq:2:x^2+x+1,zn:3",
    ] {
        let (r, f, g) = build(spec);
        let p = maximal_ideal_partition(&r, &f).unwrap();
        assert_eq!(p.len(), f.maximal_ideals.len() + 1, "{spec}");
        assert!(is_partition_independent(&g, &p).unwrap(), "{spec}");
    }
    let (r, f, _) = build("zn:15");
    let p = maximal_ideal_partition(&r, &f).unwrap();
    assert_eq!(p.labels, ["U(R)", "<3>", "<5>"]);
    assert_eq!(p.blocks[2].to_vec(), vec![5, 10]);
}

#[test]
fn cosets_are_independent_when_two_is_not_a_unit_mod_i() {
    let mut dependent = Vec::new();
    for spec in ["zn:12", "zn:36", "polyq:2:x^3", "prod:zn:4,zn:9", "zn:18"] {
        let (r, f, g) = build(spec);
        for ideal in f.ideals.iter().filter(|i| i.is_proper() && i.len() > 1) {
            let q = quotient_ring(&r, ideal).unwrap();
            let qf = RingFacts::compute(&q.ring, &RingLimits::default()).unwrap();
            let p = coset_blocks(&r, ideal).unwrap();
            let independent = is_partition_independent(&g, &p).unwrap();
            if !qf.is_unit(q.ring.two()) {
                assert!(independent, "{spec} / {:?}", ideal.generators());
            } else if !independent {
                dependent.push((spec, ideal.members().to_vec()));
            }
        }
    }
    assert!(dependent.contains(&("zn:12", vec![0, 3, 6, 9])));
}

#[test]
fn mismatched_facts_are_rejected() {
    let (_, f, _) = build("zn:6");
    let (r, _, _) = build("zn:7");
    assert!(UzGraph::build(&r, &f).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graphs_are_simple(n in 1usize..300) {
        let (r, f, g) = build(&format!("zn:{n}"));
        let mut degree_sum = 0;
        for u in 0..n {
            prop_assert!(!g.adjacent(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.adjacent(v, u));
                prop_assert!(f.is_unit(r.add(u, v)) && f.is_zero_divisor(r.mul(u, v)));
            }
            degree_sum += g.degree(u);
        }
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
    }
}
