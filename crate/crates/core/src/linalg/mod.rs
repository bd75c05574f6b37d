//! Exact integer and rational linear algebra.
//!
//! Everything here is generic over [`Scalar`], an exact signed integer type.
//! The rest of the crate instantiates it with arbitrary-precision integers
//! (see the aliases at the crate root); machine integers work for small inputs
//! but may overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub mod elim;
pub mod hnf;
pub mod lp;
mod matrix;
pub mod solve;

pub use elim::{
    determinant, is_unimodular, max_minor_gcd, maximal_minor_profile, minor_values, normalized_minor_values, rank,
    row_basis,
};
pub use hnf::{hnf, smith_invariants, HermiteForm, SmithInvariants};
pub use matrix::Matrix;
pub use solve::{kernel_lattice_basis, solve_rational};

/// Exact signed integer scalar.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
