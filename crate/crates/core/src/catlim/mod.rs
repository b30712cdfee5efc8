//! Limits and joins of cocommutative bialgebras, and the split-extension analyzer built on them.

mod coalg;
mod join;
mod limits;
mod split;
mod sub;

pub use coalg::{is_subcoalgebra, largest_subcoalgebra_in};
pub use join::generated_subbialgebra;
pub use limits::{categorical_kernel, equalizer_coc, probe_equalizer, pullback_coc, Equalizer, ProbeOutcome, Pullback};
pub use split::{
    default_stable_family, diagonal_point, is_stably_strong, is_strong_split_extension, product_point,
    BialgSplitExtension, StrongReport,
};
pub use sub::{corestrict, SubBialgebra};

use thiserror::Error;

use crate::bialg::BialgError;
use crate::exactla::LinAlgError;
use crate::finmon::MonoidError;
use crate::hopfadj::HopfError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("morphisms are not parallel")]
    NotParallel,
    #[error("morphisms do not share a codomain")]
    CodomainMismatch,
    #[error("not a subcoalgebra: {0}")]
    NotSubcoalgebra(String),
    #[error("not a sub-bialgebra ({0})")]
    NotSubbialgebra(String),
    #[error("image of {0} leaves the subobject")]
    NotInSubobject(String),
    #[error("f∘s is not the identity")]
    NotSplit,
    #[error("k is not the kernel of f")]
    NotAKernel,
    #[error("not cocommutative")]
    NotCocommutative,
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Bialg(#[from] BialgError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

#[cfg(test)]
mod tests;
