use std::collections::HashSet;

use serde::Serialize;

use super::{Element, ElementSet, FiniteRing};
use crate::error::{Error, Result};

/// An ideal of a finite ring. Equality compares member sets only.
#[derive(Debug, Clone, Serialize)]
pub struct Ideal {
    members: ElementSet,
    /// Informational only: a generating set found during enumeration.
    generators: Vec<Element>,
    proper: bool,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn zero(ring: &FiniteRing) -> Self {
        Ideal::principal(ring, ring.zero())
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Ideal::principal(ring, ring.one())
    }

    /// `R * a`.
    pub fn principal(ring: &FiniteRing, a: Element) -> Self {
        let members =
            ElementSet::from_elements(ring.order(), ring.elements().map(|r| ring.mul(r, a)));
        Ideal::with_members(ring, members, vec![a])
    }

    /// Validates that `members` is an ideal; the error names a violated closure.
    pub fn from_members(ring: &FiniteRing, members: ElementSet) -> Result<Self> {
        if members.universe() != ring.order() {
            return Err(Error::RingMismatch(format!(
                "set over {} elements used with ring of order {}",
                members.universe(),
                ring.order()
            )));
        }
        if !members.contains(ring.zero()) {
            return Err(Error::NotAnIdeal(format!(
                "zero element {} missing",
                ring.zero()
            )));
        }
        for a in members.iter() {
            let na = ring.neg(a);
            if !members.contains(na) {
                return Err(Error::NotAnIdeal(format!("-{a} = {na} missing")));
            }
            for b in members.iter() {
                let s = ring.add(a, b);
                if !members.contains(s) {
                    return Err(Error::NotAnIdeal(format!("{a} + {b} = {s} missing")));
                }
            }
            for r in ring.elements() {
                let p = ring.mul(r, a);
                if !members.contains(p) {
                    return Err(Error::NotAnIdeal(format!("{r} * {a} = {p} missing")));
                }
            }
        }
        let generators = members.to_vec();
        Ok(Ideal::with_members(ring, members, generators))
    }

    fn with_members(ring: &FiniteRing, members: ElementSet, generators: Vec<Element>) -> Self {
        let proper = ring.is_trivial() || !members.contains(ring.one());
        Ideal {
            members,
            generators,
            proper,
        }
    }

    /// `I + J = { i + j }`, built one coset of `I` at a time.
    pub fn sum(&self, other: &Ideal, ring: &FiniteRing) -> Ideal {
        let mut members = self.members.clone();
        for j in other.members.iter() {
            if members.contains(j) {
                continue;
            }
            for i in self.members.iter() {
                members.insert(ring.add(i, j));
            }
        }
        let mut generators = self.generators.clone();
        generators.extend(
            other
                .generators
                .iter()
                .copied()
                .filter(|g| !self.generators.contains(g)),
        );
        Ideal::with_members(ring, members, generators)
    }

    pub fn intersection(&self, other: &Ideal, ring: &FiniteRing) -> Ideal {
        let members = self.members.intersection(&other.members);
        let generators = members.to_vec();
        Ideal::with_members(ring, members, generators)
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True when the ideal misses `one`. The zero ideal of the trivial ring
    /// counts as proper.
    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// All cosets `r + I`, ordered by their smallest element.
    pub fn cosets(&self, ring: &FiniteRing) -> Vec<Coset> {
        let mut seen = ElementSet::empty(ring.order());
        let mut out = Vec::with_capacity(ring.order() / self.len().max(1));
        for r in ring.elements() {
            if seen.contains(r) {
                continue;
            }
            let coset = Coset::new(ring, r, self);
            for x in coset.members.iter() {
                seen.insert(x);
            }
            out.push(coset);
        }
        out
    }
}

/// The translate `representative + ideal`.
#[derive(Debug, Clone, Serialize)]
pub struct Coset {
    pub representative: Element,
    pub members: ElementSet,
}

impl Coset {
    pub fn new(ring: &FiniteRing, representative: Element, ideal: &Ideal) -> Self {
        let members = ElementSet::from_elements(
            ring.order(),
            ideal.members.iter().map(|i| ring.add(representative, i)),
        );
        Coset {
            representative,
            members,
        }
    }
}

/// Every ideal of `ring`, each exactly once, smallest first.
///
/// Principal ideals `R a` are closed under pairwise sums until nothing new
/// appears. Every ideal of a finite ring is a finite sum of principal ideals,
/// so the fixpoint is the full ideal lattice.
pub fn ideals(ring: &FiniteRing, limit: usize) -> Result<Vec<Ideal>> {
    if ring.order() > limit {
        return Err(Error::TooLarge {
            what: "ideal enumeration",
            size: ring.order(),
            limit,
        });
    }
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut all: Vec<Ideal> = Vec::new();
    for a in ring.elements() {
        let ideal = Ideal::principal(ring, a);
        if seen.insert(ideal.members.clone()) {
            all.push(ideal);
        }
    }
    let mut i = 0;
    while i < all.len() {
        for j in 0..i {
            if all[i].is_subset(&all[j]) || all[j].is_subset(&all[i]) {
                continue;
            }
            let s = all[i].sum(&all[j], ring);
            if seen.insert(s.members.clone()) {
                all.push(s);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.to_vec().cmp(&b.members.to_vec()))
    });
    Ok(all)
}

/// Subset enumeration oracle for tiny rings: every subset containing zero is
/// tested against the ideal axioms directly.
pub fn ideals_brute_force(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    const LIMIT: usize = 20;
    let n = ring.order();
    if n > LIMIT {
        return Err(Error::TooLarge {
            what: "subset enumeration",
            size: n,
            limit: LIMIT,
        });
    }
    let others: Vec<Element> = ring.elements().filter(|&x| x != ring.zero()).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << others.len()) {
        let mut members = ElementSet::empty(n);
        members.insert(ring.zero());
        for (bit, &x) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                members.insert(x);
            }
        }
        let closed = members.iter().all(|a| {
            members.iter().all(|b| members.contains(ring.add(a, b)))
                && ring.elements().all(|r| members.contains(ring.mul(r, a)))
        });
        if closed {
            let generators = members.to_vec();
            out.push(Ideal::with_members(ring, members, generators));
        }
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.to_vec().cmp(&b.members.to_vec()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member_lists(ideals: &[Ideal]) -> Vec<Vec<Element>> {
        ideals.iter().map(|i| i.members().to_vec()).collect()
    }

    #[test]
    fn ideals_of_z12() {
        let r = FiniteRing::zn(12).unwrap();
        let found = ideals(&r, 512).unwrap();
        assert_eq!(
            member_lists(&found),
            vec![
                vec![0],
                vec![0, 6],
                vec![0, 4, 8],
                vec![0, 3, 6, 9],
                vec![0, 2, 4, 6, 8, 10],
                (0..12).collect(),
            ]
        );
    }

    #[test]
    fn ideals_of_field_and_klein_ring() {
        let f = FiniteRing::zn(7).unwrap();
        assert_eq!(ideals(&f, 512).unwrap().len(), 2);
        let k = FiniteRing::product(vec![FiniteRing::zn(2).unwrap(), FiniteRing::zn(2).unwrap()])
            .unwrap();
        assert_eq!(ideals(&k, 512).unwrap().len(), 4);
    }

    #[test]
    fn limit_is_an_error() {
        let r = FiniteRing::zn(600).unwrap();
        assert!(matches!(ideals(&r, 512), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn non_ideal_reports_witness() {
        let r = FiniteRing::zn(6).unwrap();
        let err = Ideal::from_members(&r, ElementSet::from_elements(6, [0, 1])).unwrap_err();
        assert!(matches!(err, Error::NotAnIdeal(_)));
        let err = Ideal::from_members(&r, ElementSet::from_elements(6, [2, 4])).unwrap_err();
        assert!(err.to_string().contains("zero"));
    }

    #[test]
    fn cosets_partition_ring() {
        let r = FiniteRing::zn(12).unwrap();
        let j = Ideal::from_members(&r, ElementSet::from_elements(12, [0, 6])).unwrap();
        let cosets = j.cosets(&r);
        assert_eq!(cosets.len(), 6);
        assert!(cosets.iter().all(|c| c.members.len() == 2));
        assert_eq!(cosets[2].members.to_vec(), vec![2, 8]);
    }
}
