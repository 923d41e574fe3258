//! Graded polynomial identities of `M_n(K)` with an elementary grading.
//!
//! The crate evaluates graded polynomials on generic matrices, decides graded
//! identities, enumerates monomial identities and produces checkable rewrite
//! certificates for congruences modulo the commutator and conjugate-swap
//! identities.

pub mod cli;
pub mod commpoly;
pub mod document;
pub mod error;
pub mod field;
pub mod freealg;
pub mod generic;
pub mod grading;
pub mod groups;
pub mod monomials;
pub mod rewrite;

pub use error::{Error, Result};
