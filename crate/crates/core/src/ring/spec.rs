//! Textual ring specifications.
//!
//! ```text
//! zn:12                      integers modulo 12
//! prod:zn:3,zn:5             direct product (factors may be any spec)
//! polyq:2:x^2+x+1            Z_2[x]/(x^2+x+1)
//! polyq:2:1,1,1              same, little-endian coefficients
//! quot:zn:12/jacobson        quotient by the Jacobson radical
//! quot:zn:30/maxideal:1      quotient by the maximal ideal with index 1 (0-based)
//! table:rings.json           ring read from a Cayley-table file
//! table:rings.json#2         third ring of a file holding a list
//! ```
//!
//! `table:` consumes the rest of the input, so it can only appear last.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::{quotient_ring, FiniteRing, RingFacts, RingLimits};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zn(usize),
    Product(Vec<RingSpec>),
    PolyQuotient { modulus: usize, poly: Vec<usize> },
    Quotient { base: Box<RingSpec>, by: QuotientBy },
    Table { path: PathBuf, index: Option<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientBy {
    Jacobson,
    MaximalIdeal(usize),
}

impl RingSpec {
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Parser { src: input, pos: 0 };
        let spec = p.spec()?;
        if p.pos != input.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(spec)
    }

    /// Constructs the ring; its label is the canonical form of this spec.
    pub fn build(&self, limits: &RingLimits) -> Result<FiniteRing> {
        let ring = match self {
            RingSpec::Zn(n) => FiniteRing::zn(*n)?,
            RingSpec::Product(factors) => FiniteRing::product(
                factors
                    .iter()
                    .map(|f| f.build(limits))
                    .collect::<Result<Vec<_>>>()?,
            )?,
            RingSpec::PolyQuotient { modulus, poly } => FiniteRing::poly_quotient(*modulus, poly)?,
            RingSpec::Quotient { base, by } => {
                let base = base.build(limits)?;
                let facts = RingFacts::compute(&base, limits)?;
                let ideal = match by {
                    QuotientBy::Jacobson => facts.jacobson.clone(),
                    QuotientBy::MaximalIdeal(k) => {
                        facts.maximal_ideals.get(*k).cloned().ok_or_else(|| {
                            Error::InvalidRing(format!(
                                "{} has {} maximal ideals, index {k} requested",
                                base.label(),
                                facts.maximal_ideals.len()
                            ))
                        })?
                    }
                };
                quotient_ring(&base, &ideal)?.ring
            }
            RingSpec::Table { path, index } => {
                let mut rings = load_table_rings(path)?;
                match index {
                    Some(k) if *k < rings.len() => rings.swap_remove(*k),
                    None if rings.len() == 1 => rings.pop().expect("one ring"),
                    _ => {
                        return Err(Error::InvalidRing(format!(
                            "{} holds {} rings; select one with #k",
                            path.display(),
                            rings.len()
                        )))
                    }
                }
            }
        };
        Ok(ring.with_label(self.to_string()))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "zn:{n}"),
            RingSpec::Product(factors) => {
                write!(f, "prod:")?;
                for (i, s) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            RingSpec::PolyQuotient { modulus, poly } => {
                write!(f, "polyq:{modulus}:{}", super::format_poly_descending(poly))
            }
            RingSpec::Quotient { base, by } => match by {
                QuotientBy::Jacobson => write!(f, "quot:{base}/jacobson"),
                QuotientBy::MaximalIdeal(k) => write!(f, "quot:{base}/maxideal:{k}"),
            },
            RingSpec::Table { path, index } => {
                write!(f, "table:{}", path.display())?;
                if let Some(k) = index {
                    write!(f, "#{k}")?;
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.rest().chars().nth(offset)
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return Err(Error::parse(self.pos, "expected a number"));
        }
        let start = self.pos;
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))
    }

    fn spec(&mut self) -> Result<RingSpec> {
        let start = self.pos;
        if self.eat("zn:") {
            let n = self.number()?;
            if n == 0 {
                return Err(Error::parse(start + 3, "Z_n requires n >= 1"));
            }
            Ok(RingSpec::Zn(n))
        } else if self.eat("prod:") {
            let mut factors = vec![self.spec()?];
            while self.peek() == Some(',')
                && self.peek_at(1).is_some_and(|c| c.is_ascii_alphabetic())
            {
                self.pos += 1;
                factors.push(self.spec()?);
            }
            Ok(RingSpec::Product(factors))
        } else if self.eat("polyq:") {
            let modulus = self.number()?;
            self.expect(":")?;
            let poly_start = self.pos;
            let poly = self.polynomial()?;
            if modulus < 2 {
                return Err(Error::parse(start + 6, "modulus must be >= 2"));
            }
            let reduced: Vec<usize> = poly.iter().map(|c| c % modulus).collect();
            let degree = reduced.iter().rposition(|&c| c != 0);
            if degree.is_none_or(|d| d == 0 || reduced[d] != 1) {
                return Err(Error::parse(
                    poly_start,
                    "modulus polynomial must be monic of degree >= 1",
                ));
            }
            Ok(RingSpec::PolyQuotient {
                modulus,
                poly: reduced[..=degree.unwrap_or(0)].to_vec(),
            })
        } else if self.eat("quot:") {
            let base = self.spec()?;
            self.expect("/")?;
            let by = if self.eat("jacobson") {
                QuotientBy::Jacobson
            } else if self.eat("maxideal:") {
                QuotientBy::MaximalIdeal(self.number()?)
            } else {
                return Err(Error::parse(
                    self.pos,
                    "expected `jacobson` or `maxideal:<k>`",
                ));
            };
            Ok(RingSpec::Quotient {
                base: Box::new(base),
                by,
            })
        } else if self.eat("table:") {
            let rest = self.rest().to_string();
            self.pos = self.src.len();
            if rest.is_empty() {
                return Err(Error::parse(start + 6, "expected a file path"));
            }
            let (path, index) = match rest.rsplit_once('#') {
                Some((p, k)) if !k.is_empty() && k.chars().all(|c| c.is_ascii_digit()) => (
                    p.to_string(),
                    Some(k.parse().map_err(|_| Error::parse(start, "bad index"))?),
                ),
                _ => (rest, None),
            };
            Ok(RingSpec::Table {
                path: PathBuf::from(path),
                index,
            })
        } else {
            Err(Error::parse(
                start,
                "expected one of `zn:`, `prod:`, `polyq:`, `quot:`, `table:`",
            ))
        }
    }

    /// Either little-endian coefficients `c0,c1,...` or a sum of terms such as `x^2+2x+1`.
    fn polynomial(&mut self) -> Result<Vec<usize>> {
        let starts_list = {
            let digits = self
                .rest()
                .chars()
                .take_while(|c| c.is_ascii_digit())
                .count();
            digits > 0
                && self.peek_at(digits) == Some(',')
                && self.peek_at(digits + 1).is_some_and(|c| c.is_ascii_digit())
        };
        if starts_list {
            let mut coeffs = vec![self.number()?];
            while self.peek() == Some(',') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
                coeffs.push(self.number()?);
            }
            return Ok(coeffs);
        }
        let mut coeffs: Vec<usize> = Vec::new();
        loop {
            let term_start = self.pos;
            let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let c = self.number()?;
                self.eat("*");
                Some(c)
            } else {
                None
            };
            let degree = if self.eat("x") {
                if self.eat("^") {
                    self.number()?
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(Error::parse(term_start, "expected a polynomial term"));
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] += coeff.unwrap_or(1);
            if !self.eat("+") {
                break;
            }
        }
        Ok(coeffs)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFileRing {
    #[serde(default)]
    #[allow(dead_code)]
    label: Option<String>,
    zero: usize,
    one: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum TableFile {
    One(TableFileRing),
    Many(Vec<TableFileRing>),
}

/// Reads a JSON table file holding one ring object or a list of them:
/// `{"label": "...", "zero": 0, "one": 1, "add": [[...]], "mul": [[...]]}`.
/// The optional `label` is informational; rings are labelled by their spec.
pub fn load_table_rings(path: &Path) -> Result<Vec<FiniteRing>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let parsed: TableFile = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidRing(format!("{}: {e}", path.display())))?;
    let entries = match parsed {
        TableFile::One(r) => vec![r],
        TableFile::Many(rs) => rs,
    };
    let count = entries.len();
    entries
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            let ring = FiniteRing::from_tables(r.add, r.mul, r.zero, r.one)?;
            let label = if count == 1 {
                format!("table:{}", path.display())
            } else {
                format!("table:{}#{k}", path.display())
            };
            Ok(ring.with_label(label))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) -> String {
        RingSpec::parse(s).unwrap().to_string()
    }

    #[test]
    fn parses_every_form() {
        assert_eq!(RingSpec::parse("zn:12").unwrap(), RingSpec::Zn(12));
        assert_eq!(
            RingSpec::parse("prod:zn:3,zn:5").unwrap(),
            RingSpec::Product(vec![RingSpec::Zn(3), RingSpec::Zn(5)])
        );
        assert_eq!(
            RingSpec::parse("polyq:2:x^2").unwrap(),
            RingSpec::PolyQuotient {
                modulus: 2,
                poly: vec![0, 0, 1]
            }
        );
        assert_eq!(
            RingSpec::parse("polyq:2:0,0,1").unwrap(),
            RingSpec::parse("polyq:2:x^2").unwrap()
        );
        assert_eq!(roundtrip("polyq:3:x^2+2*x+1"), "polyq:3:x^2+2x+1");
        assert_eq!(roundtrip("quot:zn:12/jacobson"), "quot:zn:12/jacobson");
        assert_eq!(roundtrip("quot:zn:30/maxideal:2"), "quot:zn:30/maxideal:2");
        assert_eq!(
            roundtrip("prod:polyq:2:1,1,1,zn:3"),
            "prod:polyq:2:x^2+x+1,zn:3"
        );
        assert_eq!(
            roundtrip("prod:zn:2,quot:zn:4/jacobson"),
            "prod:zn:2,quot:zn:4/jacobson"
        );
        assert_eq!(
            RingSpec::parse("table:data/r.json#3").unwrap(),
            RingSpec::Table {
                path: "data/r.json".into(),
                index: Some(3)
            }
        );
    }

    #[test]
    fn errors_carry_positions() {
        match RingSpec::parse("zn:") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match RingSpec::parse("prod:zn:3,foo") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 10),
            other => panic!("{other:?}"),
        }
        assert!(RingSpec::parse("zn:0").is_err());
        assert!(RingSpec::parse("zn:5x").is_err());
        assert!(RingSpec::parse("polyq:4:2x^2+1").is_err());
        assert!(RingSpec::parse("quot:zn:12/radical").is_err());
    }

    #[test]
    fn builds_labelled_rings() {
        let limits = RingLimits::default();
        let r = RingSpec::parse("quot:zn:12/jacobson")
            .unwrap()
            .build(&limits)
            .unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.label(), "quot:zn:12/jacobson");
        let r = RingSpec::parse("quot:zn:30/maxideal:0")
            .unwrap()
            .build(&limits)
            .unwrap();
        assert_eq!(r.order(), 2);
        let r = RingSpec::parse("quot:zn:30/maxideal:2")
            .unwrap()
            .build(&limits)
            .unwrap();
        assert_eq!(r.order(), 5);
        assert!(RingSpec::parse("quot:zn:30/maxideal:3")
            .unwrap()
            .build(&limits)
            .is_err());
    }

    #[test]
    fn table_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z3.json");
        std::fs::write(
            &path,
            r#"{"zero":0,"one":1,"add":[[0,1,2],[1,2,0],[2,0,1]],"mul":[[0,0,0],[0,1,2],[0,2,1]]}"#,
        )
        .unwrap();
        let spec = RingSpec::parse(&format!("table:{}", path.display())).unwrap();
        let r = spec.build(&RingLimits::default()).unwrap();
        assert_eq!(r.order(), 3);
        assert_eq!(r.mul(2, 2), 1);

        let bad = dir.path().join("bad.json");
        std::fs::write(
            &bad,
            r#"{"zero":0,"one":1,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]]}"#,
        )
        .unwrap();
        assert!(load_table_rings(&bad).is_err());
    }
}
