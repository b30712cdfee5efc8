//! Bialgebras presented by structure constants, their morphisms, tensor products and duals.

mod bialgebra;
mod dual;
mod morphism;
mod tensor;

pub(crate) use bialgebra::describe_vector;
pub use bialgebra::{check_bialgebra, Axiom, AxiomViolation, Bialgebra, RawBialgebra};
pub use dual::{dual_algebra, FiniteAlgebra};
pub use morphism::{check_morphism, BialgMorphism, MorphismLaw};
pub use tensor::{
    pair_into_tensor, section4_identity_check, tensor_bialgebra, tensor_label, PairingVerdict, TensorProduct,
};

use thiserror::Error;

use crate::exactla::{Field, LinAlgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BialgError {
    #[error("malformed structure constants: {0}")]
    Shape(String),
    #[error("mixed field tags: {0} and {1}")]
    MixedFields(Field, Field),
    #[error("fields differ: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("{0}")]
    Axiom(AxiomViolation),
    #[error("not a morphism: {law} fails at {witness}")]
    Morphism { law: MorphismLaw, witness: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("morphisms do not share a source")]
    SourceMismatch,
    #[error("{0}")]
    NotATensor(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
