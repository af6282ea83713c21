//! Exact enumeration of plane forests of a given degree type, their hook
//! length polynomials, and bijections on colored labelled forests.
//!
//! Everything is computed with arbitrary-precision rationals, so every
//! identity is checked as an exact equality.

pub mod algebra;
pub mod bijection;
pub mod cli;
pub mod colored;
pub mod degree;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod hook;
pub mod sweep;

pub use degree::DegreeSequence;
pub use enumerate::{count_forests, enumerate_forests};
pub use error::{Error, Result};
pub use forest::{degree_sequence_of, hook_length, parse_forest, serialize_forest, PlaneForest, PlaneTree, VertexRef};
