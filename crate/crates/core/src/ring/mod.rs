//! Finite commutative rings with identity.
//!
//! Elements are plain indices `0..order`. Each ring knows how to add,
//! multiply and negate its own indices; mixing indices between rings is a
//! contract violation that the higher layers detect by comparing orders and
//! labels.

use std::sync::Arc;

use crate::error::{Error, Result};

pub mod arith;
mod facts;
mod ideal;
mod quotient;
mod set;
pub mod spec;

pub use facts::{
    jacobson_by_units, jacobson_radical, maximal_ideals, units, zero_divisors, RingFacts,
    RingLimits,
};
pub use ideal::{ideals, ideals_brute_force, Coset, Ideal};
pub use quotient::{quotient_ring, Quotient};
pub use set::ElementSet;

/// Index of an element inside its owning ring.
pub type Element = usize;

/// Largest ring that may be stored as explicit Cayley tables.
pub const MAX_TABLE_ORDER: usize = 2048;

/// Largest ring order accepted by any constructor.
pub const MAX_ORDER: usize = 1 << 24;

/// Explicit addition and multiplication tables, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTables {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl CayleyTables {
    fn build(
        order: usize,
        add: impl Fn(Element, Element) -> Element,
        mul: impl Fn(Element, Element) -> Element,
    ) -> Self {
        let mut a = Vec::with_capacity(order * order);
        let mut m = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                a.push(add(x, y) as u32);
                m.push(mul(x, y) as u32);
            }
        }
        CayleyTables {
            order,
            add: a,
            mul: m,
            neg: Vec::new(),
            labels: None,
        }
    }

    fn fill_negation(&mut self, zero: Element) -> Result<()> {
        let n = self.order;
        let mut neg = vec![u32::MAX; n];
        for (x, slot) in neg.iter_mut().enumerate() {
            for y in 0..n {
                if self.add[x * n + y] as usize == zero {
                    *slot = y as u32;
                    break;
                }
            }
            if *slot == u32::MAX {
                return Err(Error::AxiomViolation(format!(
                    "element {x} has no additive inverse"
                )));
            }
        }
        self.neg = neg;
        Ok(())
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }
}

#[derive(Debug, Clone)]
pub enum RingKind {
    /// `Z_n` with arithmetic modulo `n`.
    Modular { n: usize },
    /// Componentwise ring on a Cartesian product. The first factor is the most
    /// significant digit of the mixed-radix element index.
    Product { factors: Vec<FiniteRing> },
    /// `Z_m[x]/(f)` for monic `f`, coefficients little-endian.
    PolyQuotient { modulus: usize, poly: Vec<usize> },
    /// A ring given only by its Cayley tables.
    Table,
}

#[derive(Debug, Clone)]
pub struct FiniteRing {
    kind: RingKind,
    order: usize,
    zero: Element,
    one: Element,
    tables: Option<Arc<CayleyTables>>,
    label: String,
}

impl FiniteRing {
    /// The ring of integers modulo `n`.
    pub fn zn(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRing("Z_n requires n >= 1".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "ring order",
                size: n,
                limit: MAX_ORDER,
            });
        }
        Ok(FiniteRing {
            kind: RingKind::Modular { n },
            order: n,
            zero: 0,
            one: if n == 1 { 0 } else { 1 },
            tables: None,
            label: format!("zn:{n}"),
        })
    }

    /// Direct product of the given factors.
    pub fn product(factors: Vec<FiniteRing>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing(
                "a direct product needs at least one factor".into(),
            ));
        }
        let mut order = 1usize;
        for f in &factors {
            order = order
                .checked_mul(f.order)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or(Error::TooLarge {
                    what: "ring order",
                    size: usize::MAX,
                    limit: MAX_ORDER,
                })?;
        }
        let encode = |pick: &dyn Fn(&FiniteRing) -> Element| {
            factors.iter().fold(0, |acc, f| acc * f.order + pick(f))
        };
        let zero = encode(&|f| f.zero);
        let one = encode(&|f| f.one);
        let label = format!(
            "prod:{}",
            factors
                .iter()
                .map(|f| f.label.as_str())
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(FiniteRing {
            kind: RingKind::Product { factors },
            order,
            zero,
            one,
            tables: None,
            label,
        })
    }

    /// `Z_m[x]/(f)` where `f` is given by little-endian coefficients and must be monic.
    pub fn poly_quotient(modulus: usize, poly: &[usize]) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing(
                "polynomial quotient needs modulus m >= 2".into(),
            ));
        }
        let mut f: Vec<usize> = poly.iter().map(|c| c % modulus).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::InvalidRing(
                "modulus polynomial must have degree >= 1".into(),
            ));
        }
        if f.last() != Some(&1) {
            return Err(Error::InvalidRing(format!(
                "modulus polynomial {} is not monic",
                format_poly_descending(&f)
            )));
        }
        let degree = f.len() - 1;
        let order = (0..degree)
            .try_fold(1usize, |acc, _| acc.checked_mul(modulus))
            .filter(|&o| o <= MAX_TABLE_ORDER)
            .ok_or(Error::TooLarge {
                what: "polynomial quotient order",
                size: modulus.saturating_pow(degree as u32),
                limit: MAX_TABLE_ORDER,
            })?;

        let to_coeffs = |mut x: usize| -> Vec<usize> {
            let mut c = vec![0; degree];
            for slot in c.iter_mut() {
                *slot = x % modulus;
                x /= modulus;
            }
            c
        };
        let from_coeffs =
            |c: &[usize]| -> Element { c.iter().rev().fold(0, |acc, &d| acc * modulus + d) };
        let add = |x: Element, y: Element| {
            let (a, b) = (to_coeffs(x), to_coeffs(y));
            let s: Vec<usize> = a.iter().zip(&b).map(|(p, q)| (p + q) % modulus).collect();
            from_coeffs(&s)
        };
        let mul = |x: Element, y: Element| {
            let (a, b) = (to_coeffs(x), to_coeffs(y));
            let mut prod = vec![0usize; 2 * degree];
            for (i, &p) in a.iter().enumerate() {
                for (j, &q) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + p * q) % modulus;
                }
            }
            // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
            for k in (degree..2 * degree).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                prod[k] = 0;
                for (i, &fi) in f[..degree].iter().enumerate() {
                    let idx = k - degree + i;
                    prod[idx] = (prod[idx] + modulus * modulus - (c * fi) % modulus) % modulus;
                }
            }
            from_coeffs(&prod[..degree])
        };

        let mut tables = CayleyTables::build(order, add, mul);
        tables.fill_negation(0)?;
        tables.labels = Some(
            (0..order)
                .map(|x| format_poly_ascending(&to_coeffs(x)))
                .collect(),
        );
        Ok(FiniteRing {
            kind: RingKind::PolyQuotient {
                modulus,
                poly: f.clone(),
            },
            order,
            zero: 0,
            one: if order == 1 { 0 } else { 1 },
            tables: Some(Arc::new(tables)),
            label: format!("polyq:{modulus}:{}", format_poly_descending(&f)),
        })
    }

    /// A ring given by Cayley tables. Every ring axiom is verified, which costs
    /// `O(order^3)` table lookups.
    pub fn from_tables(
        add: Vec<Vec<Element>>,
        mul: Vec<Vec<Element>>,
        zero: Element,
        one: Element,
    ) -> Result<Self> {
        let order = add.len();
        if order == 0 {
            return Err(Error::InvalidRing(
                "table ring must have at least one element".into(),
            ));
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::TooLarge {
                what: "table ring order",
                size: order,
                limit: MAX_TABLE_ORDER,
            });
        }
        if mul.len() != order || add.iter().chain(mul.iter()).any(|row| row.len() != order) {
            return Err(Error::InvalidRing(format!(
                "tables must both be {order}x{order}"
            )));
        }
        if zero >= order || one >= order {
            return Err(Error::InvalidRing("zero/one index out of range".into()));
        }
        if let Some((x, y)) = (0..order)
            .flat_map(|x| (0..order).map(move |y| (x, y)))
            .find(|&(x, y)| add[x][y] >= order || mul[x][y] >= order)
        {
            return Err(Error::AxiomViolation(format!(
                "operation on ({x}, {y}) leaves the ring"
            )));
        }
        let mut tables = CayleyTables::build(order, |x, y| add[x][y], |x, y| mul[x][y]);
        tables.fill_negation(zero)?;
        let ring = FiniteRing {
            kind: RingKind::Table,
            order,
            zero,
            one,
            tables: Some(Arc::new(tables)),
            label: "table".into(),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Builds a table ring from operations already known to satisfy the axioms
    /// (for example operations induced on cosets of an ideal).
    pub(crate) fn from_trusted_ops(
        order: usize,
        zero: Element,
        one: Element,
        add: impl Fn(Element, Element) -> Element,
        mul: impl Fn(Element, Element) -> Element,
        labels: Option<Vec<String>>,
        label: String,
    ) -> Result<Self> {
        if order > MAX_TABLE_ORDER {
            return Err(Error::TooLarge {
                what: "table ring order",
                size: order,
                limit: MAX_TABLE_ORDER,
            });
        }
        let mut tables = CayleyTables::build(order, add, mul);
        tables.fill_negation(zero)?;
        tables.labels = labels;
        Ok(FiniteRing {
            kind: RingKind::Table,
            order,
            zero,
            one,
            tables: Some(Arc::new(tables)),
            label,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn one(&self) -> Element {
        self.one
    }

    /// `1 + 1`.
    pub fn two(&self) -> Element {
        self.add(self.one, self.one)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn tables(&self) -> Option<&CayleyTables> {
        self.tables.as_deref()
    }

    #[inline]
    pub fn add(&self, x: Element, y: Element) -> Element {
        debug_assert!(x < self.order && y < self.order);
        match &self.kind {
            RingKind::Modular { n } => {
                let s = x + y;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
            RingKind::Product { factors } => componentwise(factors, x, y, FiniteRing::add),
            RingKind::PolyQuotient { .. } | RingKind::Table => {
                self.table().add[x * self.order + y] as usize
            }
        }
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        debug_assert!(x < self.order && y < self.order);
        match &self.kind {
            RingKind::Modular { n } => ((x as u64 * y as u64) % *n as u64) as usize,
            RingKind::Product { factors } => componentwise(factors, x, y, FiniteRing::mul),
            RingKind::PolyQuotient { .. } | RingKind::Table => {
                self.table().mul[x * self.order + y] as usize
            }
        }
    }

    #[inline]
    pub fn neg(&self, x: Element) -> Element {
        debug_assert!(x < self.order);
        match &self.kind {
            RingKind::Modular { n } => (n - x) % n,
            RingKind::Product { factors } => {
                let mut rest = x;
                let mut place = 1;
                let mut out = 0;
                for f in factors.iter().rev() {
                    out += place * f.neg(rest % f.order);
                    rest /= f.order;
                    place *= f.order;
                }
                out
            }
            RingKind::PolyQuotient { .. } | RingKind::Table => self.table().neg[x] as usize,
        }
    }

    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    /// Component indices of a product element, first factor first.
    pub fn components(&self, x: Element) -> Option<Vec<Element>> {
        match &self.kind {
            RingKind::Product { factors } => {
                let mut rest = x;
                let mut out = vec![0; factors.len()];
                for (slot, f) in out.iter_mut().zip(factors).rev() {
                    *slot = rest % f.order;
                    rest /= f.order;
                }
                Some(out)
            }
            _ => None,
        }
    }

    /// Inverse of [`FiniteRing::components`].
    pub fn from_components(&self, parts: &[Element]) -> Option<Element> {
        match &self.kind {
            RingKind::Product { factors } if parts.len() == factors.len() => Some(
                factors
                    .iter()
                    .zip(parts)
                    .fold(0, |acc, (f, &p)| acc * f.order + p),
            ),
            _ => None,
        }
    }

    /// Human-readable name of an element: residues for `Z_n`, tuples for
    /// products, polynomials for quotients of `Z_m[x]`.
    pub fn element_label(&self, x: Element) -> String {
        match &self.kind {
            RingKind::Modular { .. } => x.to_string(),
            RingKind::Product { factors } => {
                let parts = self.components(x).unwrap_or_default();
                let inner: Vec<String> = factors
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.element_label(p))
                    .collect();
                format!("({})", inner.join(","))
            }
            RingKind::PolyQuotient { .. } | RingKind::Table => self
                .table()
                .labels
                .as_ref()
                .map(|l| l[x].clone())
                .unwrap_or_else(|| x.to_string()),
        }
    }

    /// Exhaustively checks every commutative ring with identity axiom.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        let fail = |msg: String| Err(Error::AxiomViolation(msg));
        for x in 0..n {
            if self.add(self.zero, x) != x {
                return fail(format!("{} + {x} != {x}", self.zero));
            }
            if self.mul(self.one, x) != x {
                return fail(format!("{} * {x} != {x}", self.one));
            }
            if self.add(x, self.neg(x)) != self.zero {
                return fail(format!("{x} has no additive inverse"));
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return fail(format!("addition not commutative at ({x}, {y})"));
                }
                if self.mul(x, y) != self.mul(y, x) {
                    return fail(format!("multiplication not commutative at ({x}, {y})"));
                }
                let xy_sum = self.add(x, y);
                let xy_prod = self.mul(x, y);
                for z in 0..n {
                    if self.add(xy_sum, z) != self.add(x, self.add(y, z)) {
                        return fail(format!("addition not associative at ({x}, {y}, {z})"));
                    }
                    if self.mul(xy_prod, z) != self.mul(x, self.mul(y, z)) {
                        return fail(format!("multiplication not associative at ({x}, {y}, {z})"));
                    }
                    if self.mul(x, self.add(y, z)) != self.add(xy_prod, self.mul(x, z)) {
                        return fail(format!("distributivity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        Ok(())
    }

    fn table(&self) -> &CayleyTables {
        self.tables
            .as_deref()
            .expect("table-backed ring without tables")
    }
}

fn componentwise(
    factors: &[FiniteRing],
    mut x: Element,
    mut y: Element,
    op: fn(&FiniteRing, Element, Element) -> Element,
) -> Element {
    let mut out = 0;
    let mut place = 1;
    for f in factors.iter().rev() {
        let o = f.order;
        out += place * op(f, x % o, y % o);
        x /= o;
        y /= o;
        place *= o;
    }
    out
}

/// `x^2+x+1` style, highest degree first.
pub fn format_poly_descending(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| monomial(c, k))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// `1+x` style, constant term first.
pub fn format_poly_ascending(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| monomial(c, k))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn monomial(c: usize, k: usize) -> String {
    let coeff = if c == 1 && k > 0 {
        String::new()
    } else {
        c.to_string()
    };
    match k {
        0 => coeff,
        1 => format!("{coeff}x"),
        _ => format!("{coeff}x^{k}"),
    }
}
