//! The monoid algebra functor, grouplikes, antipodes and the retraction onto `K[G(B)]`.

mod antipode;
mod component;
mod grouplike;
mod monalg;

pub use antipode::{antipode, is_hopf, verify as verify_antipode, AntipodeResult};
pub use component::{
    adjunction_counit, apply_g, apply_g_between, component_decomposition, irreducible_component, retraction,
    ComponentDecomposition,
};
pub use grouplike::{grouplikes, is_grouplike, GrouplikeSet, FIELD_CAVEAT};
pub use monalg::{monoid_algebra, monoid_algebra_map, monoid_algebra_map_between};

use thiserror::Error;

use crate::bialg::BialgError;
use crate::exactla::LinAlgError;
use crate::finmon::MonoidError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("not cocommutative")]
    NotCocommutative,
    #[error("not pointed over this field: components span {covered} of {dim} dimensions")]
    NotPointed { covered: usize, dim: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Bialg(#[from] BialgError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

#[cfg(test)]
mod tests;
