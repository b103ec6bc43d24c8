//! Exact linear algebra over the rationals.
//!
//! Matrices act on column vectors: column `j` of a matrix is the image of the
//! `j`-th basis vector. Tensor products use lexicographic basis order with the
//! left factor varying slowest, so `e_i ⊗ e_j` has index `i * dim_right + j`.

mod echelon;
mod matrix;
mod subspace;
mod tensor;

pub use echelon::{Echelon, SparseRow};
pub use matrix::{Matrix, Solver};
pub use subspace::{intersect, kernel, quotient, Quotient, Subspace};
pub use tensor::{flat_index, multi_index, permute_factors, tensor_map};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The ground field: exact rationals, always in lowest terms.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}
