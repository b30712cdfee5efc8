//! Finite monoids, their homomorphisms, kernels, pullbacks and split extensions.

mod hom;
mod monoid;
mod split;

pub use hom::{enumerate_homs, MonoidHom, ENUMERATION_GUARD};
pub use monoid::{check_monoid, FiniteMonoid, ISOMORPHISM_GUARD};
pub use split::{enumerate_split_points, kernel_mon, pullback_mon, MonPullback, MonSplitExtension, StrongVerdict};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("a monoid needs at least one element")]
    Empty,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("table row {row}: expected {expected} entries, found {found}")]
    TableShape { row: usize, expected: usize, found: usize },
    #[error("index {value} out of range{}", row.map(|r| format!(" in row {r}")).unwrap_or_default())]
    IndexOutOfRange { row: Option<usize>, value: usize },
    #[error("identity {identity:?} is not a two-sided unit for {element:?}")]
    UnitFailure { identity: String, element: String },
    #[error("not associative at ({}, {}, {})", triple[0], triple[1], triple[2])]
    NonAssociative { triple: [String; 3] },
    #[error("map has {found} entries for a source of order {expected}")]
    HomShape { expected: usize, found: usize },
    #[error("map does not send the identity to the identity")]
    HomNotUnital,
    #[error("map is not multiplicative at ({}, {})", pair[0], pair[1])]
    HomNotMultiplicative { pair: [String; 2] },
    #[error("maps are not composable")]
    NotComposable,
    #[error("subset is not a submonoid")]
    NotClosed,
    #[error("f ∘ s is not the identity")]
    NotSplit,
    #[error("k is not the kernel of f")]
    NotAKernel,
    #[error("base monoid is not a group")]
    NotAGroup,
    #[error("pair does not lie in the pullback")]
    NotInPullback,
    #[error("skipped (size): {candidates} candidates exceed the guard of {guard}")]
    GuardExceeded { candidates: u128, guard: u128 },
}
