//! Tait graphs of knot projections, partial Kauffman states as discrete
//! Morse functions, clock and click moves, exact counting and the homology
//! of matching complexes.

pub mod checks;
pub mod complexes;
pub mod corpus;
pub mod counting;
pub mod diagram;
pub mod linalg;
pub mod moves;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod states;

use num_bigint::BigInt;

pub use diagram::{parse_pd, Colour, Diagram, DiagramError, PdCode, PlaneGraph, TaitGraph};

/// Exact counts.
pub type Count = BigInt;
/// Dense matrix of arbitrary-precision integers.
pub type IntMatrix = linalg::DenseMatrix<BigInt>;
/// Multivariate polynomial with arbitrary-precision coefficients.
pub type Poly = poly::Polynomial<BigInt>;
