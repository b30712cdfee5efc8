use std::collections::BTreeMap;

use super::CatError;
use crate::bialg::Bialgebra;
use crate::exactla::sparse::{to_sparse, Accum, SparseVec};
use crate::exactla::{Scalar, SparseEchelon, Subspace};

/// Sparse echelon copy of a subspace, for fast membership tests.
pub(crate) fn echelon_of(s: &Subspace) -> SparseEchelon {
    let mut e = SparseEchelon::new(s.field(), s.ambient_dim());
    for v in s.basis() {
        e.insert(&to_sparse(v)).expect("basis vector in ambient space");
    }
    e
}

/// Slices of `Δw` as rows `Σ_k c b_k` (fixed left index) and columns (fixed right index).
fn coproduct_slices(b: &Bialgebra, w: &SparseVec) -> Vec<SparseVec> {
    let n = b.dim();
    let mut rows: BTreeMap<usize, Accum> = BTreeMap::new();
    let mut cols: BTreeMap<usize, Accum> = BTreeMap::new();
    for (jk, c) in b.coproduct_sparse(w) {
        let (j, k) = (jk / n, jk % n);
        rows.entry(j).or_default().add(k, c.clone());
        cols.entry(k).or_default().add(j, c);
    }
    rows.into_values().chain(cols.into_values()).map(Accum::finish).collect()
}

/// `Δ(S) ⊆ S ⊗ S`, tested as `Δ(S) ⊆ (B ⊗ S) ∩ (S ⊗ B)`.
pub fn is_subcoalgebra(b: &Bialgebra, s: &Subspace) -> bool {
    let e = echelon_of(s);
    s.basis().iter().all(|w| coproduct_slices(b, &to_sparse(w)).iter().all(|v| e.contains(v)))
}

/// Two-sided ideal of `B*` generated by the given functionals.
///
/// Products with the dual basis: `(u·δ_k)(b_i) = Σ_j Δ_i^{jk} u_j`, `(δ_j·u)(b_i) = Σ_k Δ_i^{jk} u_k`.
fn ideal_closure(b: &Bialgebra, generators: &[SparseVec]) -> Result<SparseEchelon, CatError> {
    let n = b.dim();
    let mut ideal = SparseEchelon::new(b.field(), n);
    let mut queue = Vec::new();
    for g in generators {
        queue.extend(ideal.insert(g)?);
    }
    while let Some(u) = queue.pop() {
        let coeff: BTreeMap<usize, &Scalar> = u.iter().map(|(i, c)| (*i, c)).collect();
        let mut products: BTreeMap<(bool, usize), Accum> = BTreeMap::new();
        for i in 0..n {
            for (jk, c) in b.coproduct_of_basis(i) {
                let (j, k) = (jk / n, jk % n);
                if let Some(uj) = coeff.get(&j) {
                    products.entry((true, k)).or_default().add(i, c * *uj);
                }
                if let Some(uk) = coeff.get(&k) {
                    products.entry((false, j)).or_default().add(i, c * *uk);
                }
            }
        }
        for acc in products.into_values() {
            let p = acc.finish();
            if !p.is_empty() {
                queue.extend(ideal.insert(&p)?);
            }
        }
        if ideal.rank() == n {
            break;
        }
    }
    Ok(ideal)
}

/// Largest subcoalgebra inside `ker` of the given functionals.
pub(crate) fn largest_subcoalgebra_in_kernel(b: &Bialgebra, functionals: &[SparseVec]) -> Result<Subspace, CatError> {
    let d = ideal_closure(b, functionals)?.orthogonal_complement();
    if !is_subcoalgebra(b, &d) {
        return Err(CatError::Internal("closure result is not a subcoalgebra".into()));
    }
    Ok(d)
}

/// The largest subcoalgebra `D ⊆ V`: the annihilator of the ideal of `B*` generated by `V^⊥`.
pub fn largest_subcoalgebra_in(b: &Bialgebra, v: &Subspace) -> Result<Subspace, CatError> {
    if v.ambient_dim() != b.dim() || v.field() != b.field() {
        return Err(CatError::Bialg(crate::bialg::BialgError::DimensionMismatch(format!(
            "subspace of dimension {} for a {}-dimensional bialgebra",
            v.ambient_dim(),
            b.dim()
        ))));
    }
    let functionals: Vec<SparseVec> = v.annihilator().row_vectors().iter().map(|r| to_sparse(r)).collect();
    let d = largest_subcoalgebra_in_kernel(b, &functionals)?;
    if !d.is_subspace_of(v) {
        return Err(CatError::Internal("closure result escapes the subspace".into()));
    }
    Ok(d)
}
