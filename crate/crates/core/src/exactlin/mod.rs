//! Exact scalars and dense multilinear algebra.
//!
//! One flattening convention is used everywhere: `e_i ⊗ e_k` in `V ⊗ W` has flat
//! index `i * dim(W) + k`. [`kron`], [`leg_permutation`] and the helpers in
//! [`tensor`] all follow it.

mod matrix;
mod scalar;
pub mod tensor;

pub use matrix::{kron, leg_permutation, solve_inverse, Mat};
pub use scalar::Scalar;
pub use tensor::SparseVec;

/// Coordinate vector of an element of a based space.
pub type Vector = Vec<Scalar>;

use thiserror::Error;

/// Returned by [`solve_inverse`] for singular or non-square input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("matrix is not invertible")]
pub struct NotInvertible;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("bad scalar literal `{0}`")]
    BadScalar(String),
}
