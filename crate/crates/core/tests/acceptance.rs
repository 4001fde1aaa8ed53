//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use uzgraph::graph::UzGraph;
use uzgraph::invariants::{
    has_c4, is_planar, is_planar_by_subdivision, Bounded, Distance, InvariantLimits,
    SUBDIVISION_STEP_BUDGET,
};
use uzgraph::ring::arith::{euler_phi, is_prime, prime_power};
use uzgraph::ring::spec::RingSpec;
use uzgraph::ring::{
    ideals, ideals_brute_force, jacobson_by_units, quotient_ring, FiniteRing, RingFacts, RingLimits,
};
use uzgraph::theorems::{sweep, verify, RingAnalysis, SweepFamily, SweepOptions, TheoremReport};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ring(spec: &str) -> FiniteRing {
    RingSpec::parse(spec)
        .unwrap()
        .build(&RingLimits::default())
        .unwrap()
}

fn facts(r: &FiniteRing) -> RingFacts {
    RingFacts::compute(r, &RingLimits::default()).unwrap()
}

fn graph(r: &FiniteRing) -> UzGraph {
    UzGraph::build(r, &facts(r)).unwrap()
}

fn analysis(r: FiniteRing) -> RingAnalysis {
    RingAnalysis::new(r, &RingLimits::default(), &InvariantLimits::default()).unwrap()
}

fn status<'a>(report: &'a TheoremReport, id: &str) -> &'a str {
    report
        .get(id)
        .map(|c| c.verdict.label())
        .unwrap_or("missing")
}

fn edge_set(edges: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

const Z6_EDGES: [(usize, usize); 6] = [(0, 1), (0, 5), (1, 4), (2, 3), (2, 5), (3, 4)];

fn golden_graphs() -> Outcome {
    let z6 = graph(&ring("zn:6"));
    ensure!(
        edge_set(z6.edges()) == edge_set(Z6_EDGES),
        "Z_6 edges {:?}",
        z6.edges()
    );

    let z9 = graph(&ring("zn:9"));
    let ideal = [0, 3, 6];
    let k36 = edge_set(
        (0..9)
            .flat_map(|u| (0..9).map(move |v| (u, v)))
            .filter(|&(u, v)| ideal.contains(&u) && !ideal.contains(&v)),
    );
    ensure!(
        edge_set(z9.edges()) == k36 && z9.edge_count() == 18,
        "Z_9 is not K_3,6"
    );

    let r = ring("zn:12");
    let f = facts(&r);
    let g = UzGraph::build(&r, &f).unwrap();
    ensure!(
        g.edge_count() == 24 && (0..12).all(|v| g.degree(v) == 4),
        "Z_12 is not 4-regular with 24 edges"
    );
    ensure!(
        f.jacobson.members().to_vec() == [0, 6],
        "J(Z_12) = {:?}",
        f.jacobson.members().to_vec()
    );
    let q = quotient_ring(&r, &f.jacobson).unwrap();
    let qg = graph(&q.ring);
    let rep = |c: usize| q.representatives[c];
    ensure!(
        edge_set(qg.edges().into_iter().map(|(a, b)| (rep(a), rep(b)))) == edge_set(Z6_EDGES),
        "Z_12/J is not the Z_6 pattern"
    );
    let image = edge_set(
        g.edges()
            .into_iter()
            .map(|(u, v)| (q.project(u), q.project(v))),
    );
    ensure!(
        image == edge_set(qg.edges()),
        "projection of Z_12 edges differs from the quotient edges"
    );
    Ok("Z_6, Z_9 and Z_12 with Z_12/J".into())
}

fn full_zn_sweep() -> Outcome {
    let start = Instant::now();
    let rows = sweep(
        &SweepFamily::Zn { lo: 2, hi: 200 },
        &SweepOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut checks = 0;
    for row in &rows {
        let fails: Vec<&str> = row.theorems.failures().map(|c| c.id).collect();
        ensure!(fails.is_empty(), "{} fails {fails:?}", row.ring);
        checks += row.theorems.checks.len();
    }
    ensure!(rows.len() == 199, "{} rows", rows.len());
    ensure!(elapsed.as_secs() < 120, "took {elapsed:?}");
    Ok(format!(
        "199 rings, {checks} checks, 0 failures in {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn local_ring_battery() -> Outcome {
    let mut rings: Vec<(String, Option<(usize, u32)>)> = (2..=128usize)
        .filter_map(|n| {
            prime_power(n as u64).map(|(p, k)| (format!("zn:{n}"), Some((p as usize, k))))
        })
        .collect();
    for spec in ["polyq:2:x^2", "polyq:3:x^2", "polyq:2:x^2+x+1"] {
        rings.push((spec.to_string(), None));
    }
    let mut t11 = 0;
    for (spec, pk) in &rings {
        let a = analysis(ring(spec));
        let m = a.facts.maximal_ideals[0].len();
        let want = match pk {
            Some((p, k)) => (p.pow(k - 1), p.pow(k - 1) * (p - 1)),
            None => (m, a.ring.order() - m),
        };
        let got = a
            .invariants
            .complete_bipartite_sizes
            .map(|(x, y)| (x.min(y), x.max(y)));
        ensure!(
            got == Some((want.0.min(want.1), want.0.max(want.1))),
            "{spec}: sizes {got:?}, want {want:?}"
        );
        let r = verify(&a, &RingLimits::default()).map_err(|e| e.to_string())?;
        for id in ["T05", "T08", "T09", "T10"] {
            ensure!(
                status(&r, id) != "fail" && status(&r, id) != "missing",
                "{spec}: {id} {}",
                status(&r, id)
            );
        }
        if a.units().min(a.zero_divisors()) >= 2 {
            ensure!(
                status(&r, "T11") == "pass",
                "{spec}: T11 {}",
                status(&r, "T11")
            );
            t11 += 1;
        }
    }
    Ok(format!("{} local rings, T11 applied to {t11}", rings.len()))
}

fn non_local_battery() -> Outcome {
    let primes = [2, 3, 5, 7];
    for p in primes {
        for q in primes {
            let spec = format!("prod:zn:{p},zn:{q}");
            let a = analysis(ring(&spec));
            let r = verify(&a, &RingLimits::default()).map_err(|e| e.to_string())?;
            ensure!(status(&r, "T06") != "fail", "{spec}: T06 fired");
            for id in ["T13", "T16", "T17"] {
                ensure!(status(&r, id) == "pass", "{spec}: {id} {}", status(&r, id));
            }
            ensure!(status(&r, "T18") != "fail", "{spec}: T18 failed");
        }
    }
    let z12 = analysis(ring("zn:12"));
    let z6 = analysis(ring("zn:6"));
    ensure!(
        z12.invariants.diameter == Distance::Finite(3),
        "diam Z_12 = {}",
        z12.invariants.diameter
    );
    ensure!(
        z6.invariants.diameter == Distance::Finite(3),
        "diam Z_6 = {}",
        z6.invariants.diameter
    );
    let r = verify(&z12, &RingLimits::default()).map_err(|e| e.to_string())?;
    ensure!(
        status(&r, "T18") == "pass",
        "Z_12: T18 {}",
        status(&r, "T18")
    );
    Ok("16 products, diam(Z_12) = diam(Z_6) = 3".into())
}

/// Rings of order at most `max` from every constructor.
fn rings_up_to(max: usize) -> Vec<FiniteRing> {
    let mut out: Vec<FiniteRing> = (1..=max).map(|n| FiniteRing::zn(n).unwrap()).collect();
    for m in 2..=8usize {
        for b in 0..m {
            for c in 0..m {
                if m * m <= max {
                    out.push(FiniteRing::poly_quotient(m, &[c, b, 1]).unwrap());
                }
            }
        }
    }
    for spec in [
        "polyq:2:x^3",
        "polyq:2:x^3+x+1",
        "polyq:2:x^4",
        "polyq:2:x^4+x+1",
        "polyq:3:x^3",
        "polyq:2:x^5",
        "polyq:2:x^6",
        "polyq:4:x^3",
    ] {
        out.push(ring(spec));
    }
    for a in 2..=max {
        for b in a..=max / a {
            out.push(ring(&format!("prod:zn:{a},zn:{b}")));
        }
    }
    for spec in [
        "prod:zn:2,zn:2,zn:2",
        "prod:zn:2,zn:3,zn:5",
        "prod:zn:2,zn:2,zn:2,zn:2",
        "prod:polyq:2:x^2+x+1,zn:3",
        "prod:polyq:2:x^2+x+1,polyq:2:x^2+x+1",
    ] {
        out.push(ring(spec));
    }
    out.retain(|r| r.order() <= max);
    out
}

fn c4_by_tuples(g: &UzGraph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| {
        g.neighbors(a).any(|b| {
            g.neighbors(b)
                .filter(|&c| c != a)
                .any(|c| g.neighbors(c).any(|d| d != a && d != b && g.adjacent(d, a)))
        })
    })
}

fn cross_oracles() -> Outcome {
    let small = rings_up_to(16);
    for r in &small {
        let mut fast: Vec<Vec<usize>> = ideals(r, 64)
            .unwrap()
            .iter()
            .map(|i| i.members().to_vec())
            .collect();
        let mut slow: Vec<Vec<usize>> = ideals_brute_force(r)
            .unwrap()
            .iter()
            .map(|i| i.members().to_vec())
            .collect();
        fast.sort();
        slow.sort();
        ensure!(fast == slow, "ideals of {}", r.label());
    }

    let mut swept: Vec<FiniteRing> = (1..=200).map(|n| FiniteRing::zn(n).unwrap()).collect();
    swept.extend(rings_up_to(64));
    for r in &swept {
        ensure!(
            facts(r).jacobson.members() == &jacobson_by_units(r),
            "Jacobson radical of {}",
            r.label()
        );
    }

    for n in 1..=200usize {
        let by_gcd = if n == 1 {
            1
        } else {
            (0..n).filter(|&k| gcd(k, n) == 1).count()
        };
        ensure!(euler_phi(n as u64) as usize == by_gcd, "phi({n})");
        ensure!(
            facts(&FiniteRing::zn(n).unwrap()).units.len() == by_gcd,
            "|U(Z_{n})|"
        );
    }

    let mut c4 = 0;
    for r in rings_up_to(24) {
        let g = graph(&r);
        ensure!(has_c4(&g) == c4_by_tuples(&g), "C4 on {}", r.label());
        c4 += 1;
    }

    let mut planar = 0;
    let mut nonplanar = 0;
    for r in rings_up_to(64) {
        let g = graph(&r);
        let lr = is_planar(&g);
        match is_planar_by_subdivision(&g, 64, SUBDIVISION_STEP_BUDGET) {
            Bounded::Exact(sub) => ensure!(
                sub == lr,
                "planarity of {}: LR {lr}, subdivision {sub}",
                r.label()
            ),
            Bounded::Skipped { .. } => {
                return Err(format!("subdivision search skipped {}", r.label()))
            }
        }
        if lr {
            planar += 1;
        } else {
            nonplanar += 1;
        }
    }
    Ok(format!(
        "{} ideal lattices, {} radicals, {c4} C4 checks, planarity on {planar} planar and {nonplanar} nonplanar graphs",
        small.len(),
        swept.len()
    ))
}

fn characterisations() -> Outcome {
    let rows = sweep(
        &SweepFamily::Zn { lo: 2, hi: 200 },
        &SweepOptions::default(),
    )
    .map_err(|e| e.to_string())?;
    for row in &rows {
        let n = row.order;
        let inv = &row.invariants;
        let odd_mixed = n % 2 == 1 && prime_power(n as u64).is_none();
        ensure!(inv.is_cycle_graph == (n == 4 || n == 6), "cycle Z_{n}");
        ensure!(inv.is_path_graph == (n == 2 || n == 3), "path Z_{n}");
        ensure!(inv.is_star == is_prime(n as u64), "star Z_{n}");
        ensure!(inv.has_c3 == odd_mixed, "C3 Z_{n}");
    }
    Ok("n = 2..=200".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_uzgraph"))
            .args(["sweep", "zn", "2", "100", "--format", "csv"])
            .env_clear()
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure!(
        a.status.success() && b.status.success(),
        "exit {:?} {:?}",
        a.status,
        b.status
    );
    ensure!(a.stdout == b.stdout, "outputs differ");
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden graphs", golden_graphs),
        ("full Z_n sweep 2..200", full_zn_sweep),
        ("local ring battery", local_ring_battery),
        ("non-local battery", non_local_battery),
        ("cross-oracle agreement", cross_oracles),
        ("characterisation endpoints", characterisations),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
