//! Exact invariants of graded modules presented by monomials over GF(p):
//! Hilbert functions, reduction numbers, generator degrees, Krull dimension,
//! Castelnuovo-Mumford regularity via Koszul homology, and seeded series
//! experiments tracking how these invariants grow along powers I^n M.
//!
//! All linear algebra is dense and exact over a prime field; all randomness
//! is seeded and reproducible.

pub mod asymptotics;
pub mod error;
pub mod instance;
pub mod koszul;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod oracle;
pub mod reduction;
pub mod suites;

pub use error::Error;
pub use instance::{InstanceFile, RunConfig};
pub use linalg::{FieldMatrix, PrimeField, DEFAULT_PRIME};
pub use module::{BasisElement, Component, GradedModule, KrullDim};
pub use monomial::{Monomial, MonomialIdeal};
pub use reduction::{generic_reduction_number, rho, ReductionIdeal, ReductionReport};
