//! Computational toolkit for the split Okubo algebra: exact arithmetic over
//! finite fields and cyclotomic rationals, the algebra in several models,
//! its derivation algebra, and a census of its idempotents.

pub mod algebra;
pub mod error;
pub mod fields;
pub mod idempotents;
pub mod liealg;
pub mod linalg;
pub mod okubo;
pub mod poly;

pub use algebra::{CompositionReport, StructureConstantAlgebra, Vector};
pub use error::{Error, Result};
pub use fields::{Field, Scalar};
pub use linalg::{Matrix, Subspace};
