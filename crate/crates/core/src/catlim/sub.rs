use std::collections::HashMap;
use std::sync::Arc;

use super::coalg::{echelon_of, is_subcoalgebra};
use super::CatError;
use crate::bialg::{describe_vector, BialgMorphism, Bialgebra, RawBialgebra};
use crate::exactla::sparse::{to_sparse, SparseVec};
use crate::exactla::{Matrix, Scalar, Subspace};

/// A subspace of a bialgebra with the closure properties that were verified for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubBialgebra {
    pub ambient: Arc<Bialgebra>,
    pub space: Subspace,
    pub subalgebra: bool,
    pub subcoalgebra: bool,
    pub contains_unit: bool,
}

impl SubBialgebra {
    pub fn analyze(ambient: Arc<Bialgebra>, space: Subspace) -> Self {
        let e = echelon_of(&space);
        let basis: Vec<SparseVec> = space.basis().iter().map(|v| to_sparse(v)).collect();
        let subalgebra = basis.iter().all(|u| basis.iter().all(|v| e.contains(&ambient.multiply_sparse(u, v))));
        let subcoalgebra = is_subcoalgebra(&ambient, &space);
        let contains_unit = space.contains(ambient.unit());
        SubBialgebra { ambient, space, subalgebra, subcoalgebra, contains_unit }
    }

    pub fn is_subbialgebra(&self) -> bool {
        self.subalgebra && self.subcoalgebra && self.contains_unit
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Coordinates of a member in the echelon basis: its entries at the pivots.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.space.coordinates(v)
    }

    /// Standalone bialgebra on the echelon basis, with its inclusion.
    pub fn extract(&self) -> Result<(Arc<Bialgebra>, BialgMorphism), CatError> {
        if !self.is_subbialgebra() {
            return Err(CatError::NotSubbialgebra(format!(
                "subalgebra: {}, subcoalgebra: {}, unit: {}",
                self.subalgebra, self.subcoalgebra, self.contains_unit
            )));
        }
        let b = &*self.ambient;
        let n = b.dim();
        let field = b.field();
        let pivots = self.space.pivots();
        let slot: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let d = pivots.len();
        let basis: Vec<SparseVec> = self.space.basis().iter().map(|v| to_sparse(v)).collect();
        let at_pivots = |v: &SparseVec| -> SparseVec {
            v.iter().filter_map(|(i, c)| slot.get(i).map(|&k| (k, c.clone()))).collect()
        };
        let mut mul = Vec::with_capacity(d * d);
        for u in &basis {
            for v in &basis {
                mul.push(at_pivots(&b.multiply_sparse(u, v)));
            }
        }
        let comul = basis
            .iter()
            .map(|u| {
                let mut out: SparseVec = b
                    .coproduct_sparse(u)
                    .into_iter()
                    .filter_map(|(jk, c)| match (slot.get(&(jk / n)), slot.get(&(jk % n))) {
                        (Some(&p), Some(&q)) => Some((p * d + q, c)),
                        _ => None,
                    })
                    .collect();
                out.sort_by_key(|(i, _)| *i);
                out
            })
            .collect();
        let unit = self.space.coordinates(b.unit()).expect("unit is a member");
        let counit = self.space.basis().iter().map(|v| b.counit_of(v)).collect();
        let labels = self.space.basis().iter().map(|v| describe_vector(b.labels(), v)).collect();
        let object = Arc::new(Bialgebra::from_trusted(RawBialgebra { field, labels, mul, unit, comul, counit }));
        let inclusion = Matrix::from_columns(field, n, self.space.basis());
        Ok((object.clone(), BialgMorphism::from_trusted(inclusion, object, self.ambient.clone())))
    }
}

/// Factors `h` through an inclusion `i` with image `sub`, checking containment.
pub fn corestrict(h: &BialgMorphism, sub: &SubBialgebra, inclusion: &BialgMorphism) -> Result<BialgMorphism, CatError> {
    if h.target() != &sub.ambient || inclusion.target() != &sub.ambient {
        return Err(CatError::Bialg(crate::bialg::BialgError::NotComposable));
    }
    let field = h.source().field();
    let columns = (0..h.source().dim())
        .map(|c| {
            sub.coordinates(&h.matrix().column(c))
                .ok_or_else(|| CatError::NotInSubobject(h.source().label(c).to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = Matrix::from_columns(field, sub.dim(), &columns);
    Ok(BialgMorphism::from_trusted(matrix, h.source().clone(), inclusion.source().clone()))
}
