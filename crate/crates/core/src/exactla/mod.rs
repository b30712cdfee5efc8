//! Exact scalars, dense matrices and echelon-form subspaces over `Q` and `F_p`.

mod echelon;
mod matrix;
mod poly;
mod scalar;
pub mod sparse;
mod subspace;
mod tensor;

pub use echelon::SparseEchelon;
pub use matrix::Matrix;
pub use poly::{minimal_polynomial, roots_in_field, Poly};
pub use scalar::{Field, Scalar, MAX_PRIME};
pub use subspace::Subspace;
pub use tensor::{tensor_index, unflatten};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("mixed field tags: {0} and {1}")]
    MixedFields(Field, Field),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimensions differ: {0} and {1}")]
    AmbientMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unrecognised field tag {0:?} (expected \"Q\" or \"F_p:<prime>\")")]
    BadField(String),
    #[error("malformed scalar {0:?}")]
    BadScalar(String),
    #[error("root search needs the zero polynomial's roots")]
    ZeroPolynomial,
    #[error("rational root search cannot factor {0}")]
    RootSearchTooLarge(String),
}

#[cfg(test)]
mod props;
