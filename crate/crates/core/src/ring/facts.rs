use serde::Serialize;

use super::{ideals, Element, ElementSet, FiniteRing, Ideal};
use crate::error::Result;

/// Size limits for the algebraic side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingLimits {
    pub ideal_enumeration: usize,
}

impl Default for RingLimits {
    fn default() -> Self {
        RingLimits {
            ideal_enumeration: 512,
        }
    }
}

/// Cached algebraic anatomy of one ring.
#[derive(Debug, Clone, Serialize)]
pub struct RingFacts {
    pub ring_label: String,
    pub order: usize,
    pub units: ElementSet,
    pub zero_divisors: ElementSet,
    pub ideals: Vec<Ideal>,
    pub maximal_ideals: Vec<Ideal>,
    pub jacobson: Ideal,
    pub is_local: bool,
    pub is_field: bool,
}

impl RingFacts {
    pub fn compute(ring: &FiniteRing, limits: &RingLimits) -> Result<Self> {
        let units = units(ring);
        let zero_divisors = zero_divisors(ring);
        let ideals = ideals(ring, limits.ideal_enumeration)?;
        let maximal_ideals = maximal_ideals_of(&ideals);
        let jacobson = jacobson_of(ring, &maximal_ideals);
        let is_local = maximal_ideals.len() == 1;
        let is_field = !ring.is_trivial() && units.len() == ring.order() - 1;
        Ok(RingFacts {
            ring_label: ring.label().to_string(),
            order: ring.order(),
            units,
            zero_divisors,
            ideals,
            maximal_ideals,
            jacobson,
            is_local,
            is_field,
        })
    }

    pub fn is_unit(&self, x: Element) -> bool {
        self.units.contains(x)
    }

    pub fn is_zero_divisor(&self, x: Element) -> bool {
        self.zero_divisors.contains(x)
    }

    pub fn proper_ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| i.is_proper())
    }

    /// True when these facts were computed for `ring`.
    pub fn describes(&self, ring: &FiniteRing) -> bool {
        self.order == ring.order() && self.ring_label == ring.label()
    }
}

/// `{ x : x y = 1 for some y }`. The trivial ring has the single unit `0`.
pub fn units(ring: &FiniteRing) -> ElementSet {
    let one = ring.one();
    ElementSet::from_elements(
        ring.order(),
        ring.elements()
            .filter(|&x| ring.elements().any(|y| ring.mul(x, y) == one)),
    )
}

/// `{ x : x y = 0 for some y != 0 }`, which contains `0` whenever the ring is
/// nontrivial and is empty for the trivial ring.
pub fn zero_divisors(ring: &FiniteRing) -> ElementSet {
    let zero = ring.zero();
    ElementSet::from_elements(
        ring.order(),
        ring.elements()
            .filter(|&x| ring.elements().any(|y| y != zero && ring.mul(x, y) == zero)),
    )
}

/// Proper ideals not strictly contained in another proper ideal, largest first.
pub fn maximal_ideals(ring: &FiniteRing, limits: &RingLimits) -> Result<Vec<Ideal>> {
    Ok(maximal_ideals_of(&ideals(ring, limits.ideal_enumeration)?))
}

fn maximal_ideals_of(all: &[Ideal]) -> Vec<Ideal> {
    let proper: Vec<&Ideal> = all
        .iter()
        .filter(|i| i.is_proper() && i.members().universe() > 1)
        .collect();
    let mut maximal: Vec<Ideal> = proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect();
    // largest first, so Z_n lists <p> for its smallest prime p first
    maximal.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.members().to_vec().cmp(&b.members().to_vec()))
    });
    maximal
}

/// Intersection of all maximal ideals; `{0}` for the trivial ring.
pub fn jacobson_radical(ring: &FiniteRing, limits: &RingLimits) -> Result<Ideal> {
    Ok(jacobson_of(ring, &maximal_ideals(ring, limits)?))
}

fn jacobson_of(ring: &FiniteRing, maximal: &[Ideal]) -> Ideal {
    let mut iter = maximal.iter();
    match iter.next() {
        None => Ideal::zero(ring),
        Some(first) => iter.fold(first.clone(), |acc, m| acc.intersection(m, ring)),
    }
}

/// The radical through its element-wise characterization
/// `{ x : 1 - x y is a unit for every y }`.
pub fn jacobson_by_units(ring: &FiniteRing) -> ElementSet {
    let u = units(ring);
    let one = ring.one();
    ElementSet::from_elements(
        ring.order(),
        ring.elements().filter(|&x| {
            ring.elements()
                .all(|y| u.contains(ring.sub(one, ring.mul(x, y))))
        }),
    )
}
