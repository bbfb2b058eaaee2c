//! Exact computations in Lie-Poisson algebras of classical Lie algebras.

pub mod algebra;
pub mod cli;
pub mod counterexample;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod poisson;
pub mod poly;
pub mod rank_lab;
pub mod rational;
pub mod sampling;
pub mod subalgebra;

pub use error::{Error, Result};
