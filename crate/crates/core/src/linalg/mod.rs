//! Exact dense and sparse integer linear algebra.

pub mod dense;
pub mod sparse;

pub use dense::DenseMatrix;
pub use sparse::{Reduction, SparseColumn, SparseMatrix};
