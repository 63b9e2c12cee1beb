//! Exact Hosoya polynomials of graphs and their Mycielskians, with the
//! distance-based indices and vulnerability measures they determine.
//!
//! ```
//! use hosoya::constructions::{generate, mycielskian, GeneratorSpec};
//! use hosoya::hosoya::hosoya;
//!
//! let p2 = generate(&GeneratorSpec::Path(2)).unwrap();
//! assert_eq!(hosoya(&p2).to_string(), "2*x + x^2");
//! assert_eq!(hosoya(&mycielskian(&p2)).to_string(), "9*x + 12*x^2");
//! ```
//!
//! All arithmetic is exact: integers are `i128` with checked operations and
//! fractional values are [`Rational`]s. Overflow is an error, never a
//! wrapped value.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hosoya;
pub mod indices;
pub mod polynomial;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Diameter, DistanceDistribution, Graph};
pub use indices::IndexReport;
pub use polynomial::{IntPolynomial, Polynomial, Rational};
