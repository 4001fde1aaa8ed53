//! Executable versions of the structural theorems about `G_UZ(R)`.
//!
//! Every check produces a verdict; a failure always carries a concrete
//! witness and never aborts the run.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{coset_blocks, maximal_ideal_partition, UzGraph};
use crate::invariants::{
    self, analyze, complete_bipartite_sides, find_c3, find_c4, kst_c4_condition,
    partition_violation, Bounded, Distance, InvariantLimits, InvariantReport,
};
use crate::ring::arith::{euler_phi, factorize, is_prime, prime_power};
use crate::ring::{quotient_ring, Element, FiniteRing, Ideal, RingFacts, RingKind, RingLimits};

mod sweep;

pub use sweep::{sweep, SweepFamily, SweepOptions, SweepRow, SUMMARY_HEADER};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

impl Verdict {
    fn fail(witness: impl Into<String>) -> Self {
        Verdict::Fail {
            witness: witness.into(),
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Verdict::Skipped {
            reason: reason.into(),
        }
    }

    fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::fail(witness())
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Verdict::Skipped { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::Skipped { .. } => "skipped",
        }
    }

    /// The witness or skip reason, empty for a pass.
    pub fn detail(&self) -> &str {
        match self {
            Verdict::Pass => "",
            Verdict::Fail { witness } => witness,
            Verdict::Skipped { reason } => reason,
        }
    }
}

/// One theorem evaluated on one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// For one-directional statements: whether the converse happens to hold
    /// on this ring.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converse_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub ring: String,
    pub order: usize,
    pub checks: Vec<TheoremCheck>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl TheoremReport {
    fn new(ring: &str, order: usize, checks: Vec<TheoremCheck>) -> Self {
        let count = |f: fn(&Verdict) -> bool| checks.iter().filter(|c| f(&c.verdict)).count();
        TheoremReport {
            ring: ring.to_string(),
            order,
            passed: count(Verdict::is_pass),
            failed: count(Verdict::is_fail),
            skipped: count(Verdict::is_skipped),
            checks,
        }
    }

    pub fn get(&self, id_prefix: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id.starts_with(id_prefix))
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| c.verdict.is_fail())
    }

    /// Appends another report's checks for the same ring.
    pub fn merge(self, other: TheoremReport) -> TheoremReport {
        let mut checks = self.checks;
        checks.extend(other.checks);
        TheoremReport::new(&self.ring, self.order, checks)
    }
}

/// Everything derived from one ring: facts, graph and invariants.
#[derive(Debug, Clone)]
pub struct RingAnalysis {
    pub ring: FiniteRing,
    pub facts: RingFacts,
    pub graph: UzGraph,
    pub invariants: InvariantReport,
}

impl RingAnalysis {
    pub fn new(
        ring: FiniteRing,
        ring_limits: &RingLimits,
        limits: &InvariantLimits,
    ) -> Result<Self> {
        let facts = RingFacts::compute(&ring, ring_limits)?;
        let graph = UzGraph::build(&ring, &facts)?;
        let invariants = analyze(&graph, limits);
        Ok(RingAnalysis {
            ring,
            facts,
            graph,
            invariants,
        })
    }

    pub fn units(&self) -> usize {
        self.facts.units.len()
    }

    pub fn zero_divisors(&self) -> usize {
        self.facts.zero_divisors.len()
    }

    fn two_is_unit(&self) -> bool {
        self.facts.is_unit(self.ring.two())
    }
}

/// Runs every ring-level check, plus the `Z_n` checks when the ring is `Z_n`.
pub fn verify(a: &RingAnalysis, ring_limits: &RingLimits) -> Result<TheoremReport> {
    let report = check_ring(a, ring_limits)?;
    Ok(match a.ring.kind() {
        RingKind::Modular { .. } => report.merge(check_zn(a)),
        _ => report,
    })
}

struct Checks(Vec<TheoremCheck>);

impl Checks {
    fn push(&mut self, id: &'static str, statement: &'static str, verdict: Verdict) {
        self.push_with_converse(id, statement, verdict, None);
    }

    fn push_with_converse(
        &mut self,
        id: &'static str,
        statement: &'static str,
        verdict: Verdict,
        converse_holds: Option<bool>,
    ) {
        self.0.push(TheoremCheck {
            id,
            statement,
            verdict,
            converse_holds,
        });
    }
}

const TRIVIAL: &str = "trivial ring";

/// The ring-level catalogue: graph structure, then the theorems on degrees,
/// locality, partitions, quotients and the Jacobson radical.
pub fn check_ring(a: &RingAnalysis, ring_limits: &RingLimits) -> Result<TheoremReport> {
    let mut c = Checks(Vec::new());
    let r = &a.ring;
    let f = &a.facts;
    let g = &a.graph;
    let inv = &a.invariants;
    let n = r.order();

    c.push(
        "S01-graph-structure",
        "G_UZ(R) is simple and follows the adjacency rule",
        structure(a),
    );

    let statements: [(&'static str, &'static str); 18] = [
        ("T01-max-degree", "maximum degree is |U(R)|, attained at 0"),
        ("T02-unit-sum", "2 not a unit => u1 + u2 is not a unit for units u1, u2"),
        ("T03-regularity", "2 not a unit => G is |U(R)|-regular"),
        ("T04-eulerian", "2 not a unit, |U(R)| even, G connected => G Eulerian"),
        ("T05-local-complete-bipartite", "R local => G = K_{|m|,|U(R)|}"),
        ("T06-complete-bipartite-local", "G complete bipartite => R local"),
        ("T07-star-field", "G is a star <=> R is a field"),
        ("T08-local-eulerian", "R local => (G Eulerian <=> |R| and |U(R)| even)"),
        ("T09-local-hamiltonian", "R local => (G Hamiltonian <=> |U(R)| = |Z(R)|)"),
        ("T10-local-planar", "R local => (G planar <=> |U(R)| <= 2 or |Z(R)| <= 2)"),
        ("T11-local-parameters", "R local, |U|,|Z| >= 2 => diam 2, girth 4, clique 2, chromatic 2, alpha max(|U|,|Z|), gamma 2"),
        ("T12-bipartite-condition", "R local or 2 not a unit => G bipartite"),
        ("T13-maximal-ideal-partite", "{U(R), I_1, I_2 \\ I_1, ...} is an independent partition"),
        ("T14-quotient-star", "G_UZ(R/m) is a star for every maximal ideal m"),
        ("T15-coset-independence", "2 + I not a unit in R/I => every coset of I is independent"),
        ("T16-radical-lift", "x+J ~ y+J in G_UZ(R/J) => every element of x+J ~ every element of y+J"),
        ("T17-radical-project", "x ~ y in G => x+J ~ y+J in G_UZ(R/J)"),
        ("T18-diameter-equality", "R not Z_2: diam G = diam G_UZ(R/J) <=> both connected and R/J not Z_2"),
    ];

    if r.is_trivial() {
        for (id, s) in statements {
            c.push(id, s, Verdict::skip(TRIVIAL));
        }
        return Ok(TheoremReport::new(r.label(), n, c.0));
    }
    let [s01, s02, s03, s04, s05, s06, s07, s08, s09, s10, s11, s12, s13, s14, s15, s16, s17, s18] =
        statements;

    let units = a.units();
    let zds = a.zero_divisors();
    let two_unit = a.two_is_unit();
    let local = f.is_local;

    // T01
    let deg0 = g.degree(r.zero());
    c.push(
        s01.0,
        s01.1,
        Verdict::from_bool(inv.max_degree == units && deg0 == units, || {
            format!(
                "max degree {}, deg(0) = {deg0}, |U| = {units}",
                inv.max_degree
            )
        }),
    );

    // T02
    let unit_sum = if two_unit {
        Verdict::skip("2 is a unit")
    } else {
        let bad = f.units.iter().find_map(|u| {
            f.units
                .iter()
                .find(|&v| f.is_unit(r.add(u, v)))
                .map(|v| (u, v))
        });
        match bad {
            None => Verdict::Pass,
            Some((u, v)) => Verdict::fail(format!(
                "{} + {} = {} is a unit",
                r.element_label(u),
                r.element_label(v),
                r.element_label(r.add(u, v))
            )),
        }
    };
    c.push(s02.0, s02.1, unit_sum);

    // T03
    let regular = inv.is_regular && inv.max_degree == units;
    let t03 = if two_unit {
        Verdict::skip("2 is a unit")
    } else {
        Verdict::from_bool(regular, || {
            let v = (0..n).find(|&v| g.degree(v) != units).unwrap_or(0);
            format!(
                "deg({}) = {} but |U| = {units}",
                r.element_label(v),
                g.degree(v)
            )
        })
    };
    c.push_with_converse(s03.0, s03.1, t03, Some(!regular || !two_unit));

    // T04
    let t04 = if two_unit {
        Verdict::skip("2 is a unit")
    } else if units % 2 == 1 {
        Verdict::skip("|U(R)| is odd")
    } else if let Some(v) = (0..n).find(|&v| g.degree(v) % 2 == 1) {
        Verdict::fail(format!(
            "deg({}) = {} is odd",
            r.element_label(v),
            g.degree(v)
        ))
    } else if !inv.connected {
        Verdict::skip("all degrees even but G is disconnected")
    } else {
        Verdict::from_bool(inv.is_eulerian, || {
            "connected with even degrees yet not Eulerian".into()
        })
    };
    c.push(s04.0, s04.1, t04);

    // T05
    let sides = complete_bipartite_sides(g);
    let t05 = if !local {
        Verdict::skip("R is not local")
    } else {
        let m = f.maximal_ideals[0].members();
        match &sides {
            Some((x, y)) if (x == m && *y == f.units) || (y == m && *x == f.units) => Verdict::Pass,
            Some((x, y)) => Verdict::fail(format!(
                "sides of sizes {} and {} differ from |m| = {}, |U| = {units}",
                x.len(),
                y.len(),
                m.len()
            )),
            None => Verdict::fail(missing_cross_edge(a, m)),
        }
    };
    c.push(s05.0, s05.1, t05);

    // T06
    let t06 = match &sides {
        None => Verdict::skip("G is not complete bipartite"),
        Some((x, y)) => Verdict::from_bool(local, || {
            format!(
                "G = K_{{{},{}}} but R has {} maximal ideals",
                x.len(),
                y.len(),
                f.maximal_ideals.len()
            )
        }),
    };
    c.push(s06.0, s06.1, t06);

    // T07
    c.push(
        s07.0,
        s07.1,
        Verdict::from_bool(inv.is_star == f.is_field, || {
            format!("star = {}, field = {}", inv.is_star, f.is_field)
        }),
    );

    // T08
    let t08 = if !local {
        Verdict::skip("R is not local")
    } else {
        let expected = n.is_multiple_of(2) && units.is_multiple_of(2);
        Verdict::from_bool(inv.is_eulerian == expected, || {
            format!("Eulerian = {}, |R| = {n}, |U| = {units}", inv.is_eulerian)
        })
    };
    c.push(s08.0, s08.1, t08);

    // T09
    let t09 = if !local {
        Verdict::skip("R is not local")
    } else if units == 1 && zds == 1 {
        Verdict::skip("G = K_2: |U| = |Z| = 1 but K_2 has no cycle")
    } else {
        match inv.is_hamiltonian {
            Bounded::Skipped { limit } => {
                Verdict::skip(format!("Hamiltonicity skipped above {limit} vertices"))
            }
            Bounded::Exact(h) => Verdict::from_bool(h == (units == zds), || {
                format!("Hamiltonian = {h}, |U| = {units}, |Z| = {zds}")
            }),
        }
    };
    c.push(s09.0, s09.1, t09);

    // T10
    let t10 = if !local {
        Verdict::skip("R is not local")
    } else {
        let expected = units <= 2 || zds <= 2;
        Verdict::from_bool(inv.is_planar == expected, || {
            format!("planar = {}, |U| = {units}, |Z| = {zds}", inv.is_planar)
        })
    };
    c.push(s10.0, s10.1, t10);

    // T11
    c.push(s11.0, s11.1, local_parameters(a));

    // T12
    let bip_hyp = local || !two_unit;
    let t12 = if !bip_hyp {
        Verdict::skip("R is not local and 2 is a unit")
    } else {
        Verdict::from_bool(inv.is_bipartite, || match invariants::bipartiteness(g) {
            invariants::Bipartiteness::OddCycle(cycle) => format!("odd cycle {cycle:?}"),
            _ => "not bipartite".into(),
        })
    };
    c.push_with_converse(s12.0, s12.1, t12, Some(!inv.is_bipartite || bip_hyp));

    // T13
    let partition = maximal_ideal_partition(r, f)?;
    let t13 = match partition_violation(g, &partition)? {
        None if partition.len() <= f.maximal_ideals.len() + 1 => Verdict::Pass,
        None => Verdict::fail(format!(
            "{} blocks for {} maximal ideals",
            partition.len(),
            f.maximal_ideals.len()
        )),
        Some(e) => Verdict::fail(format!(
            "edge {}-{} inside block {}",
            r.element_label(e.u),
            r.element_label(e.v),
            partition.labels[e.block]
        )),
    };
    c.push(s13.0, s13.1, t13);

    // T14
    let mut t14 = Verdict::Pass;
    for m in &f.maximal_ideals {
        let q = quotient_ring(r, m)?;
        let qf = RingFacts::compute(&q.ring, ring_limits)?;
        let qg = UzGraph::build(&q.ring, &qf)?;
        if !invariants::is_star(&qg) {
            t14 = Verdict::fail(format!("G_UZ(R/{}) is not a star", ideal_members(r, m)));
            break;
        }
    }
    c.push(s14.0, s14.1, t14);

    // T15
    c.push(s15.0, s15.1, coset_independence(a)?);

    // T16, T17, T18
    let (t16, t17, t18) = radical_checks(a, ring_limits)?;
    c.push(s16.0, s16.1, t16);
    c.push(s17.0, s17.1, t17);
    c.push(s18.0, s18.1, t18);

    Ok(TheoremReport::new(r.label(), n, c.0))
}

fn structure(a: &RingAnalysis) -> Verdict {
    let r = &a.ring;
    let g = &a.graph;
    let n = r.order();
    if g.vertex_count() != n {
        return Verdict::fail(format!(
            "{} vertices for a ring of order {n}",
            g.vertex_count()
        ));
    }
    for u in 0..n {
        if g.adjacent(u, u) {
            return Verdict::fail(format!("loop at {}", r.element_label(u)));
        }
        for v in u + 1..n {
            let rule = a.facts.is_unit(r.add(u, v)) && a.facts.is_zero_divisor(r.mul(u, v));
            if g.adjacent(u, v) != g.adjacent(v, u) || g.adjacent(u, v) != rule {
                return Verdict::fail(format!(
                    "pair {}, {}: adjacent = {}, rule = {rule}",
                    r.element_label(u),
                    r.element_label(v),
                    g.adjacent(u, v)
                ));
            }
        }
    }
    Verdict::Pass
}

fn missing_cross_edge(a: &RingAnalysis, m: &crate::ring::ElementSet) -> String {
    let r = &a.ring;
    for z in m.iter() {
        for u in a.facts.units.iter() {
            if !a.graph.adjacent(z, u) {
                return format!(
                    "{} in m and unit {} are not adjacent",
                    r.element_label(z),
                    r.element_label(u)
                );
            }
        }
    }
    "G is not complete bipartite".into()
}

fn local_parameters(a: &RingAnalysis) -> Verdict {
    let inv = &a.invariants;
    let (units, zds) = (a.units(), a.zero_divisors());
    if !a.facts.is_local {
        return Verdict::skip("R is not local");
    }
    if units.min(zds) < 2 {
        return Verdict::skip(format!(
            "degenerate local ring (|U| = {units}, |Z| = {zds}): diam {}, girth {}, gamma {}",
            inv.diameter, inv.girth, inv.domination_number
        ));
    }
    let bounded = [
        ("clique", inv.clique_number, 2),
        ("chromatic", inv.chromatic_number, 2),
        ("independence", inv.independence_number, units.max(zds)),
        ("domination", inv.domination_number, 2),
    ];
    let mut wrong = Vec::new();
    if inv.diameter != Distance::Finite(2) {
        wrong.push(format!("diameter {}", inv.diameter));
    }
    if inv.girth != Distance::Finite(4) {
        wrong.push(format!("girth {}", inv.girth));
    }
    for (name, value, expected) in bounded {
        match value {
            Bounded::Skipped { limit } => {
                return Verdict::skip(format!("{name} skipped above {limit} vertices"))
            }
            Bounded::Exact(v) if v != expected => {
                wrong.push(format!("{name} {v} (expected {expected})"))
            }
            Bounded::Exact(_) => {}
        }
    }
    Verdict::from_bool(wrong.is_empty(), || wrong.join(", "))
}

/// `2 + I` is a unit of `R/I` iff `2 y - 1` lies in `I` for some `y`.
fn two_unit_mod(r: &FiniteRing, ideal: &Ideal) -> bool {
    let two = r.two();
    r.elements()
        .any(|y| ideal.contains(r.sub(r.mul(two, y), r.one())))
}

fn coset_independence(a: &RingAnalysis) -> Result<Verdict> {
    let r = &a.ring;
    let mut tested = 0;
    for ideal in a.facts.proper_ideals() {
        if two_unit_mod(r, ideal) {
            continue;
        }
        tested += 1;
        let blocks = coset_blocks(r, ideal)?;
        if let Some(e) = partition_violation(&a.graph, &blocks)? {
            return Ok(Verdict::fail(format!(
                "I = {}: edge {}-{} inside coset {}",
                ideal_members(r, ideal),
                r.element_label(e.u),
                r.element_label(e.v),
                blocks.labels[e.block]
            )));
        }
    }
    Ok(if tested == 0 {
        Verdict::skip("2 + I is a unit modulo every proper ideal")
    } else {
        Verdict::Pass
    })
}

fn radical_checks(
    a: &RingAnalysis,
    ring_limits: &RingLimits,
) -> Result<(Verdict, Verdict, Verdict)> {
    let r = &a.ring;
    let g = &a.graph;
    let q = quotient_ring(r, &a.facts.jacobson)?;
    let qf = RingFacts::compute(&q.ring, ring_limits)?;
    let qg = UzGraph::build(&q.ring, &qf)?;
    let name = |x: Element| r.element_label(x);

    let mut lift = Verdict::Pass;
    'outer: for (cx, cy) in qg.edges() {
        for x in q.fiber(cx).iter() {
            for y in q.fiber(cy).iter() {
                if !g.adjacent(x, y) {
                    lift = Verdict::fail(format!(
                        "cosets of {} and {} adjacent mod J, but {} and {} are not",
                        name(q.representatives[cx]),
                        name(q.representatives[cy]),
                        name(x),
                        name(y)
                    ));
                    break 'outer;
                }
            }
        }
    }

    let mut project = Verdict::Pass;
    let mut projected = std::collections::BTreeSet::new();
    for (x, y) in g.edges() {
        let (px, py) = (q.project(x), q.project(y));
        if px == py || !qg.adjacent(px, py) {
            project = Verdict::fail(format!(
                "{} ~ {} but their cosets are not adjacent mod J",
                name(x),
                name(y)
            ));
            break;
        }
        projected.insert((px.min(py), px.max(py)));
    }
    if project.is_pass() && projected.into_iter().collect::<Vec<_>>() != qg.edges() {
        project = Verdict::fail("projected edges differ from G_UZ(R/J)");
    }

    let diameter = if r.order() == 2 {
        Verdict::skip("R is Z_2")
    } else {
        let dq = invariants::diameter(&qg);
        let (c1, c2) = (a.invariants.connected, invariants::is_connected(&qg));
        if !(c1 && c2) {
            Verdict::skip(format!(
                "a graph is disconnected (G: {c1}, G_UZ(R/J): {c2})"
            ))
        } else {
            let equal = a.invariants.diameter == dq;
            let expected = q.ring.order() != 2;
            Verdict::from_bool(equal == expected, || {
                format!(
                    "diam G = {}, diam G_UZ(R/J) = {dq}, |R/J| = {}",
                    a.invariants.diameter,
                    q.ring.order()
                )
            })
        }
    };
    Ok((lift, project, diameter))
}

fn ideal_members(r: &FiniteRing, ideal: &Ideal) -> String {
    let names: Vec<String> = ideal.members().iter().map(|x| r.element_label(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// The `Z_n` catalogue. Only meaningful when the analysed ring is `Z_n`.
pub fn check_zn(a: &RingAnalysis) -> TheoremReport {
    let n = a.ring.order();
    let mut c = Checks(Vec::new());
    let statements: [(&'static str, &'static str); 10] = [
        ("Z01-star-prime", "G_UZ(Z_n) is a star <=> n is prime"),
        ("Z02-even-bipartite", "n even => G_UZ(Z_n) bipartite"),
        (
            "Z03-prime-power",
            "n = p^k => G_UZ(Z_n) = K_{p^(k-1), p^(k-1)(p-1)}",
        ),
        (
            "Z04-prime-factor-partite",
            "m distinct primes => at most m+1 independent maximal-ideal blocks",
        ),
        (
            "Z05-c3",
            "C3 in G_UZ(Z_n) <=> n composite, odd, not a prime power",
        ),
        (
            "Z06-prime-power-c4",
            "n = p^k, p^(k-1) >= 2, p^(k-1)(p-1) >= 2 => C4",
        ),
        (
            "Z07-even-c4",
            "n >= 8 even => C4 and phi(n) > sqrt(n/2) + 1",
        ),
        ("Z08-cycle", "G_UZ(Z_n) is a cycle <=> n in {4, 6}"),
        ("Z09-path", "G_UZ(Z_n) is a path <=> n in {2, 3}"),
        ("Z10-kst-c4", "n even, phi(n) > sqrt(n/2) + 1 => C4"),
    ];
    if n < 2 {
        for (id, s) in statements {
            c.push(id, s, Verdict::skip(TRIVIAL));
        }
        return TheoremReport::new(a.ring.label(), n, c.0);
    }
    let [z01, z02, z03, z04, z05, z06, z07, z08, z09, z10] = statements;
    let inv = &a.invariants;
    let g = &a.graph;
    let n64 = n as u64;
    let prime = is_prime(n64);
    let pp = prime_power(n64);
    let phi = euler_phi(n64);

    c.push(
        z01.0,
        z01.1,
        Verdict::from_bool(inv.is_star == prime, || {
            format!("star = {}, prime = {prime}", inv.is_star)
        }),
    );

    let z02v = if n % 2 == 1 {
        Verdict::skip("n is odd")
    } else {
        Verdict::from_bool(inv.is_bipartite, || "not bipartite".into())
    };
    c.push_with_converse(
        z02.0,
        z02.1,
        z02v,
        Some(!inv.is_bipartite || n.is_multiple_of(2)),
    );

    let z03v = match pp {
        None => Verdict::skip("n is not a prime power"),
        Some((p, k)) => {
            let small = p.pow(k - 1) as usize;
            let large = small * (p as usize - 1);
            match complete_bipartite_sides(g) {
                Some((x, y)) if x.len() == small && y.len() == large => Verdict::Pass,
                Some((x, y)) => Verdict::fail(format!(
                    "G = K_{{{},{}}}, expected K_{{{small},{large}}}",
                    x.len(),
                    y.len()
                )),
                None => Verdict::fail("G is not complete bipartite"),
            }
        }
    };
    c.push(z03.0, z03.1, z03v);

    let m = factorize(n64).len();
    let z04v = match maximal_ideal_partition(&a.ring, &a.facts) {
        Err(e) => Verdict::fail(e.to_string()),
        Ok(p) => {
            if a.facts.maximal_ideals.len() != m {
                Verdict::fail(format!(
                    "{} maximal ideals, {m} prime factors",
                    a.facts.maximal_ideals.len()
                ))
            } else if p.len() > m + 1 {
                Verdict::fail(format!("{} blocks for {m} prime factors", p.len()))
            } else {
                match partition_violation(g, &p) {
                    Ok(None) => Verdict::Pass,
                    Ok(Some(e)) => Verdict::fail(format!(
                        "edge {}-{} inside block {}",
                        e.u, e.v, p.labels[e.block]
                    )),
                    Err(e) => Verdict::fail(e.to_string()),
                }
            }
        }
    };
    c.push(z04.0, z04.1, z04v);

    let expect_c3 = !prime && n % 2 == 1 && pp.is_none();
    c.push(
        z05.0,
        z05.1,
        Verdict::from_bool(inv.has_c3 == expect_c3, || match find_c3(g) {
            Some((u, v, w)) => format!("triangle {u}-{v}-{w} but n = {n}"),
            None => format!("no triangle although n = {n} is composite odd and not a prime power"),
        }),
    );

    let z06v = match pp {
        None => Verdict::skip("n is not a prime power"),
        Some((p, k)) => {
            let small = p.pow(k - 1);
            if small < 2 || small * (p - 1) < 2 {
                Verdict::skip("a side of K_{p^(k-1), p^(k-1)(p-1)} has one vertex")
            } else {
                prime_power_c4(a, p as usize)
            }
        }
    };
    c.push_with_converse(z06.0, z06.1, z06v, None);

    let z07v = if n % 2 == 1 || n < 8 {
        Verdict::skip("n is odd or below 8")
    } else {
        let inequality = kst_c4_condition(phi, n64 / 2);
        Verdict::from_bool(inv.has_c4 && inequality, || {
            format!(
                "C4 = {}, phi(n) = {phi} > sqrt({}) + 1: {inequality}",
                inv.has_c4,
                n / 2
            )
        })
    };
    c.push(z07.0, z07.1, z07v);

    let cycle_expected = n == 4 || n == 6;
    c.push(
        z08.0,
        z08.1,
        Verdict::from_bool(inv.is_cycle_graph == cycle_expected, || {
            format!("cycle graph = {}", inv.is_cycle_graph)
        }),
    );

    let path_expected = n == 2 || n == 3;
    c.push(
        z09.0,
        z09.1,
        Verdict::from_bool(inv.is_path_graph == path_expected, || {
            format!("path graph = {}", inv.is_path_graph)
        }),
    );

    let z10v = if n % 2 == 1 {
        Verdict::skip("n is odd")
    } else if !(inv.is_bipartite && inv.is_regular && inv.max_degree as u64 == phi) {
        Verdict::fail(format!(
            "premise fails: bipartite = {}, regular = {}, degree {} vs phi(n) = {phi}",
            inv.is_bipartite, inv.is_regular, inv.max_degree
        ))
    } else if !kst_c4_condition(phi, n64 / 2) {
        Verdict::skip(format!("phi(n) = {phi} <= sqrt({}) + 1", n / 2))
    } else {
        Verdict::from_bool(inv.has_c4, || "no C4".into())
    };
    c.push_with_converse(
        z10.0,
        z10.1,
        z10v,
        Some(!inv.has_c4 || n % 2 == 1 || kst_c4_condition(phi, n64 / 2)),
    );

    TheoremReport::new(a.ring.label(), n, c.0)
}

/// In `K_{a,b}` with both sides of size at least 2, the zero divisors `0`, `p`
/// and the two smallest units span a 4-cycle.
fn prime_power_c4(a: &RingAnalysis, p: usize) -> Verdict {
    let g = &a.graph;
    let mut units = a.facts.units.iter();
    let (Some(u1), Some(u2)) = (units.next(), units.next()) else {
        return Verdict::fail("fewer than two units");
    };
    let cycle = [0, u1, p, u2];
    let closed = (0..4).all(|i| g.adjacent(cycle[i], cycle[(i + 1) % 4]));
    Verdict::from_bool(closed && find_c4(g).is_some(), || {
        format!("{cycle:?} is not a 4-cycle")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(r: FiniteRing) -> TheoremReport {
        let a = RingAnalysis::new(r, &RingLimits::default(), &InvariantLimits::default()).unwrap();
        verify(&a, &RingLimits::default()).unwrap()
    }

    #[test]
    fn small_zn_all_pass() {
        for n in 2..=30 {
            let rep = run(FiniteRing::zn(n).unwrap());
            let fails: Vec<_> = rep
                .failures()
                .map(|c| (c.id, c.verdict.detail().to_string()))
                .collect();
            assert!(fails.is_empty(), "Z_{n}: {fails:?}");
            assert_eq!(rep.checks.len(), 29);
        }
    }

    #[test]
    fn trivial_ring_is_structural_only() {
        let rep = run(FiniteRing::zn(1).unwrap());
        assert_eq!(rep.passed, 1);
        assert_eq!(rep.failed, 0);
        assert_eq!(rep.skipped, rep.checks.len() - 1);
    }

    #[test]
    fn z2_guards() {
        let rep = run(FiniteRing::zn(2).unwrap());
        assert!(rep.get("T18").unwrap().verdict.is_skipped());
        assert!(rep.get("T09").unwrap().verdict.is_skipped());
    }

    #[test]
    fn four_element_field_breaks_the_unit_sum_rule() {
        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        let rep = run(f4);
        assert!(rep.get("T02").unwrap().verdict.is_fail());
        assert!(rep.get("T03").unwrap().verdict.is_fail());
        assert!(rep.get("T05").unwrap().verdict.is_pass());
        assert!(rep.get("T07").unwrap().verdict.is_pass());
    }

    #[test]
    fn z9_is_complete_bipartite() {
        let rep = run(FiniteRing::zn(9).unwrap());
        for id in ["T05", "T08", "T09", "T10", "T11", "Z03", "Z06"] {
            assert!(rep.get(id).unwrap().verdict.is_pass(), "{id}");
        }
    }
}
