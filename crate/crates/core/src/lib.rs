//! Exact toric-ideal and lattice-polytope machinery for certifying Gorenstein
//! Cayley sums, reflexive Minkowski sums and nef-partitions built from
//! unimodular configurations.

pub mod certify;
pub mod config;
pub mod corpus;
pub mod error;
pub mod graphs;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod toric;

pub use error::{Error, Result};
pub use poly::{CoeffPoly, HPoly, HStarPoly};
pub use polytope::LatticePolytope;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Rational vector; entries are always kept in lowest terms.
pub type RatVector = Vec<BigRational>;
/// Integer point.
pub type Point = Vec<BigInt>;
