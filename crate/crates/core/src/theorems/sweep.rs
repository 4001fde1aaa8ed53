//! Running the theorem catalogue over whole families of rings.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use super::{verify, RingAnalysis, TheoremReport};
use crate::error::{Error, Result};
use crate::invariants::{InvariantLimits, InvariantReport};
use crate::ring::arith::{is_prime, prime_power};
use crate::ring::spec::{load_table_rings, RingSpec};
use crate::ring::{FiniteRing, RingLimits};

/// A family of rings, enumerated in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepFamily {
    /// `Z_n` for `lo <= n <= hi`.
    Zn { lo: usize, hi: usize },
    /// `Z_{p^k}` for prime powers in `lo..=hi`.
    PrimePowers { lo: usize, hi: usize },
    /// `Z_p x Z_q` for primes `lo <= p <= q <= hi`.
    Products { lo: usize, hi: usize },
    /// `Z_m[x]/(x^2 + b x + c)` for `lo <= m <= hi` and all `b`, `c`.
    PolyQuotients { lo: usize, hi: usize },
    /// Every ring of a Cayley-table file.
    Table(PathBuf),
}

impl SweepFamily {
    /// Parses `zn LO HI`, `prime-powers LO HI`, `products LO HI`,
    /// `poly-quotients LO HI` or `table FILE`.
    pub fn parse(name: &str, args: &[String]) -> Result<Self> {
        let range = || -> Result<(usize, usize)> {
            let [lo, hi] = args else {
                return Err(Error::parse(0, format!("`{name}` takes LO and HI")));
            };
            let num = |s: &String| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(0, format!("`{s}` is not a nonnegative integer")))
            };
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(Error::parse(0, format!("empty range {lo}..{hi}")));
            }
            Ok((lo, hi))
        };
        match name {
            "zn" => {
                let (lo, hi) = range()?;
                if lo == 0 {
                    return Err(Error::parse(0, "Z_0 is not a finite ring"));
                }
                Ok(SweepFamily::Zn { lo, hi })
            }
            "prime-powers" => range().map(|(lo, hi)| SweepFamily::PrimePowers { lo, hi }),
            "products" => range().map(|(lo, hi)| SweepFamily::Products { lo, hi }),
            "poly-quotients" => range().map(|(lo, hi)| SweepFamily::PolyQuotients { lo, hi }),
            "table" => match args {
                [path] => Ok(SweepFamily::Table(PathBuf::from(path))),
                _ => Err(Error::parse(0, "`table` takes one FILE")),
            },
            other => Err(Error::parse(
                0,
                format!(
                    "unknown family `{other}` (zn, prime-powers, products, poly-quotients, table)"
                ),
            )),
        }
    }

    /// The specs of the family in sweep order; `None` for table files.
    pub fn specs(&self) -> Option<Vec<RingSpec>> {
        let primes = |lo: usize, hi: usize| -> Vec<usize> {
            (lo.max(2)..=hi).filter(|&p| is_prime(p as u64)).collect()
        };
        Some(match *self {
            SweepFamily::Zn { lo, hi } => (lo..=hi).map(RingSpec::Zn).collect(),
            SweepFamily::PrimePowers { lo, hi } => (lo.max(2)..=hi)
                .filter(|&n| prime_power(n as u64).is_some())
                .map(RingSpec::Zn)
                .collect(),
            SweepFamily::Products { lo, hi } => {
                let ps = primes(lo, hi);
                let mut out = Vec::new();
                for (i, &p) in ps.iter().enumerate() {
                    for &q in &ps[i..] {
                        out.push(RingSpec::Product(vec![RingSpec::Zn(p), RingSpec::Zn(q)]));
                    }
                }
                out
            }
            SweepFamily::PolyQuotients { lo, hi } => {
                let mut out = Vec::new();
                for m in lo.max(2)..=hi {
                    for b in 0..m {
                        for c in 0..m {
                            out.push(RingSpec::PolyQuotient {
                                modulus: m,
                                poly: vec![c, b, 1],
                            });
                        }
                    }
                }
                out
            }
            SweepFamily::Table(_) => return None,
        })
    }

    pub fn rings(&self, limits: &RingLimits) -> Result<Vec<FiniteRing>> {
        match (self, self.specs()) {
            (SweepFamily::Table(path), _) => load_table_rings(path),
            (_, Some(specs)) => specs.iter().map(|s| s.build(limits)).collect(),
            (_, None) => unreachable!("only table families lack specs"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub ring_limits: RingLimits,
    pub invariant_limits: InvariantLimits,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

/// One ring's results.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub ring: String,
    pub order: usize,
    pub units: usize,
    pub zero_divisors: usize,
    pub maximal_ideals: usize,
    pub invariants: InvariantReport,
    pub theorems: TheoremReport,
}

pub const SUMMARY_HEADER: [&str; 17] = [
    "ring",
    "|R|",
    "|U|",
    "|Z|",
    "#maxideals",
    "regular",
    "bipartite",
    "planar",
    "eulerian",
    "hamiltonian",
    "diameter",
    "girth",
    "C3",
    "C4",
    "checks_passed",
    "checks_failed",
    "checks_skipped",
];

impl SweepRow {
    pub fn from_ring(ring: FiniteRing, options: &SweepOptions) -> Result<Self> {
        let a = RingAnalysis::new(ring, &options.ring_limits, &options.invariant_limits)?;
        let theorems = verify(&a, &options.ring_limits)?;
        Ok(SweepRow {
            ring: a.ring.label().to_string(),
            order: a.ring.order(),
            units: a.units(),
            zero_divisors: a.zero_divisors(),
            maximal_ideals: a.facts.maximal_ideals.len(),
            invariants: a.invariants,
            theorems,
        })
    }

    /// Cells in [`SUMMARY_HEADER`] order.
    pub fn summary(&self) -> Vec<String> {
        let inv = &self.invariants;
        vec![
            self.ring.clone(),
            self.order.to_string(),
            self.units.to_string(),
            self.zero_divisors.to_string(),
            self.maximal_ideals.to_string(),
            inv.is_regular.to_string(),
            inv.is_bipartite.to_string(),
            inv.is_planar.to_string(),
            inv.is_eulerian.to_string(),
            inv.is_hamiltonian.to_string(),
            inv.diameter.to_string(),
            inv.girth.to_string(),
            inv.has_c3.to_string(),
            inv.has_c4.to_string(),
            self.theorems.passed.to_string(),
            self.theorems.failed.to_string(),
            self.theorems.skipped.to_string(),
        ]
    }
}

/// Analyses and verifies every ring of `family`. Rows come back in family
/// order whatever the number of workers.
pub fn sweep(family: &SweepFamily, options: &SweepOptions) -> Result<Vec<SweepRow>> {
    let rings = family.rings(&options.ring_limits)?;
    let run = || -> Result<Vec<SweepRow>> {
        rings
            .into_par_iter()
            .map(|r| SweepRow::from_ring(r, options))
            .collect()
    };
    match options.jobs {
        None => run(),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run),
    }
}
