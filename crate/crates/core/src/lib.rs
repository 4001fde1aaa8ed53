//! Unit-zero divisor graphs of finite commutative rings.
//!
//! Two distinct elements `x`, `y` of a ring `R` are adjacent when `x + y` is a
//! unit and `x y` is a zero divisor. The crate builds these graphs, computes
//! their invariants exactly, and checks structural theorems relating the graph
//! to the ring (units, maximal ideals, Jacobson radical) across ring families.

pub mod cli;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod ring;
pub mod theorems;

pub use error::{Error, Result};
