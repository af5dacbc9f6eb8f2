//! Exact computer algebra for Lie triple systems.
//!
//! The crate builds finite-dimensional Lie triple systems from structure
//! constants, their standard embedding Lie algebras and Killing forms, and
//! degree-truncated nonassociative universal enveloping algebras whose
//! normal forms are certified against the symmetric-algebra dimension count.
//! On top of that sits the bialgebra layer (counit, comultiplication, the
//! sign automorphism and the two divisions) and a set of exact checks for the
//! identities these algebras satisfy.
//!
//! All arithmetic is over the rationals and exact.

pub mod envelope;
pub mod error;
pub mod exactlin;
pub mod freealg;
pub mod hopf;
pub mod lts;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, SparseVector, Subspace};
