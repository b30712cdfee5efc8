use std::sync::Arc;

use super::coalg::is_subcoalgebra;
use super::sub::SubBialgebra;
use super::CatError;
use crate::bialg::Bialgebra;
use crate::exactla::sparse::{to_sparse, SparseVec};
use crate::exactla::{SparseEchelon, Subspace};

/// Smallest sub-bialgebra containing `v`, which must already be a subcoalgebra.
///
/// Closes `v + span{1}` under products, then re-checks the coalgebra condition.
pub fn generated_subbialgebra(x: &Arc<Bialgebra>, v: &Subspace) -> Result<SubBialgebra, CatError> {
    if !is_subcoalgebra(x, v) {
        return Err(CatError::NotSubcoalgebra("generators do not span a subcoalgebra".into()));
    }
    let mut span = SparseEchelon::new(x.field(), x.dim());
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut pending: Vec<SparseVec> = Vec::new();
    for g in v.basis().iter().map(|g| to_sparse(g)).chain(std::iter::once(to_sparse(x.unit()))) {
        pending.extend(span.insert(&g)?);
    }
    while let Some(u) = pending.pop() {
        basis.push(u);
        let u = basis.last().expect("just pushed");
        let mut fresh = Vec::new();
        for w in &basis {
            for p in [x.multiply_sparse(u, w), x.multiply_sparse(w, u)] {
                if let Some(row) = span.insert(&p)? {
                    fresh.push(row);
                }
            }
        }
        pending.extend(fresh);
    }
    let sub = SubBialgebra::analyze(x.clone(), span.to_subspace());
    if !sub.subcoalgebra {
        return Err(CatError::NotSubcoalgebra("closure under products is not a subcoalgebra".into()));
    }
    Ok(sub)
}
