//! Exact rational linear algebra: scalars, sparse vectors, canonical
//! echelon subspaces and small dense matrices.

mod matrix;
mod scalar;
mod sparse;
mod subspace;

pub use matrix::{mat_bracket, Matrix};
pub use scalar::Scalar;
pub use sparse::SparseVector;
pub use subspace::{kernel, solve_combination, EchelonBuilder, Subspace};
