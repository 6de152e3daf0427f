//! Exact computer algebra for Poisson triple systems.
//!
//! The crate builds the free ternary space with three operations, expands it
//! into the free Poisson algebra, and extracts the polynomial identities of
//! degree 5 as the integer nullspace of the expansion matrix. It also checks
//! structure constants of Poisson algebras and triple systems and constructs
//! the universal enveloping Poisson algebra of a finite-dimensional system.

pub mod axioms;
pub mod envelope;
pub mod error;
pub mod exactla;
pub mod freelie;
pub mod freepoisson;
pub mod identities;
pub mod instances;
pub mod lincomb;
pub mod relations;
pub mod scalar;
pub mod selftest;
pub mod symgroup;
pub mod ternary;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational coefficients used throughout the pipelines.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers for lattice computations.
pub type Integer = num_bigint::BigInt;

pub type LieCombinationQ = freelie::LieCombination<Rational>;
pub type PoissonCombinationQ = freepoisson::PoissonCombination<Rational>;
pub type TernaryCombinationQ = ternary::TernaryCombination<Rational>;
