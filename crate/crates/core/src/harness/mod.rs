//! File formats, the bundled catalog, reports and the command-line front end.

mod catalog;
pub mod cli;
pub mod format;
mod report;
mod selftest;
mod theorem;

pub use catalog::{Catalog, LoadedCatalog, Loader, Location};
pub use report::{Claim, OutputFormat, TheoremReport, Verdict};
pub use selftest::selftest;
pub use theorem::theorem2_report;

use thiserror::Error;

use crate::bialg::BialgError;
use crate::catlim::CatError;
use crate::exactla::LinAlgError;
use crate::finmon::MonoidError;
use crate::hopfadj::HopfError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Format(String),
    #[error("{path}: {source}")]
    InFile { path: String, source: Box<HarnessError> },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("expected a {expected} document")]
    WrongKind { expected: &'static str },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Bialg(#[from] BialgError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Cat(#[from] CatError),
}

#[cfg(test)]
mod tests;
