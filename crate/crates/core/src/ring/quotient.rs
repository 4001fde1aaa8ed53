use super::{Element, ElementSet, FiniteRing, Ideal};
use crate::error::{Error, Result};

/// `R / I` together with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// `projection[x]` is the index of the coset `x + I`.
    pub projection: Vec<Element>,
    /// Smallest element of each coset, indexed by coset.
    pub representatives: Vec<Element>,
}

impl Quotient {
    pub fn project(&self, x: Element) -> Element {
        self.projection[x]
    }

    /// All elements of `R` mapped to the coset `c`.
    pub fn fiber(&self, c: Element) -> ElementSet {
        ElementSet::from_elements(
            self.projection.len(),
            self.projection
                .iter()
                .enumerate()
                .filter(|&(_, &p)| p == c)
                .map(|(x, _)| x),
        )
    }
}

/// Builds the quotient ring on the cosets of `ideal`. Cosets are numbered in
/// order of their smallest element, so the zero coset is always `0`.
pub fn quotient_ring(ring: &FiniteRing, ideal: &Ideal) -> Result<Quotient> {
    // re-validate: the ideal may come from another ring or be hand-built
    let ideal = Ideal::from_members(ring, ideal.members().clone())?;
    let mut projection = vec![usize::MAX; ring.order()];
    let mut representatives = Vec::new();
    for x in ring.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(x);
        for i in ideal.members().iter() {
            projection[ring.add(x, i)] = id;
        }
    }
    let order = representatives.len();
    if order * ideal.len() != ring.order() {
        return Err(Error::NotAnIdeal("cosets do not partition the ring".into()));
    }
    let labels = Some(
        representatives
            .iter()
            .map(|&r| format!("[{}]", ring.element_label(r)))
            .collect(),
    );
    let label = format!(
        "{}/({})",
        ring.label(),
        ideal
            .members()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let quotient = FiniteRing::from_trusted_ops(
        order,
        projection[ring.zero()],
        projection[ring.one()],
        |a, b| projection[ring.add(representatives[a], representatives[b])],
        |a, b| projection[ring.mul(representatives[a], representatives[b])],
        labels,
        label,
    )?;
    Ok(Quotient {
        ring: quotient,
        projection,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RingFacts, RingLimits};

    #[test]
    fn z12_mod_radical_is_z6() {
        let z12 = FiniteRing::zn(12).unwrap();
        let j = Ideal::from_members(&z12, ElementSet::from_elements(12, [0, 6])).unwrap();
        let q = quotient_ring(&z12, &j).unwrap();
        assert_eq!(q.ring.order(), 6);
        assert_eq!(q.representatives, vec![0, 1, 2, 3, 4, 5]);
        let z6 = FiniteRing::zn(6).unwrap();
        // coset k is k + J, and the identity map k -> k is an isomorphism onto Z_6
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(q.ring.add(a, b), z6.add(a, b));
                assert_eq!(q.ring.mul(a, b), z6.mul(a, b));
            }
        }
        assert_eq!(q.fiber(2).to_vec(), vec![2, 8]);
    }

    #[test]
    fn z9_mod_maximal_is_field() {
        let z9 = FiniteRing::zn(9).unwrap();
        let f = RingFacts::compute(&z9, &RingLimits::default()).unwrap();
        let q = quotient_ring(&z9, &f.maximal_ideals[0]).unwrap();
        assert_eq!(q.ring.order(), 3);
        let qf = RingFacts::compute(&q.ring, &RingLimits::default()).unwrap();
        assert!(qf.is_field);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let r = FiniteRing::product(vec![FiniteRing::zn(4).unwrap(), FiniteRing::zn(6).unwrap()])
            .unwrap();
        let f = RingFacts::compute(&r, &RingLimits::default()).unwrap();
        for ideal in &f.ideals {
            let q = quotient_ring(&r, ideal).unwrap();
            assert_eq!(q.project(r.zero()), q.ring.zero());
            assert_eq!(q.project(r.one()), q.ring.one());
            for x in r.elements() {
                for y in r.elements() {
                    assert_eq!(
                        q.project(r.add(x, y)),
                        q.ring.add(q.project(x), q.project(y))
                    );
                    assert_eq!(
                        q.project(r.mul(x, y)),
                        q.ring.mul(q.project(x), q.project(y))
                    );
                }
            }
        }
    }

    #[test]
    fn zero_ideal_gives_copy() {
        let r = FiniteRing::zn(10).unwrap();
        let q = quotient_ring(&r, &Ideal::zero(&r)).unwrap();
        assert_eq!(q.ring.order(), 10);
        assert!((0..10).all(|x| q.project(x) == x));
    }

    #[test]
    fn rejects_non_ideal() {
        let r = FiniteRing::zn(6).unwrap();
        let fake = Ideal::principal(&r, 2);
        let other = FiniteRing::zn(8).unwrap();
        assert!(quotient_ring(&other, &fake).is_err());
    }
}
