use std::collections::BTreeMap;

use super::{Field, Scalar};

/// Sorted `(index, coefficient)` pairs with no zero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Accumulator for sparse linear combinations.
#[derive(Default, Debug, Clone)]
pub struct Accum(BTreeMap<usize, Scalar>);

impl Accum {
    pub fn new() -> Self {
        Accum(BTreeMap::new())
    }

    pub fn add(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&idx) {
            Some(slot) => {
                *slot = &*slot + &c;
            }
            None => {
                self.0.insert(idx, c);
            }
        }
    }

    pub fn add_scaled(&mut self, v: &[(usize, Scalar)], scale: &Scalar) {
        if scale.is_zero() {
            return;
        }
        for (i, c) in v {
            self.add(*i, c * scale);
        }
    }

    pub fn finish(self) -> SparseVec {
        self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

pub fn to_dense(field: Field, n: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// Scales and sorts raw entries, merging duplicates.
pub fn normalize(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut acc = Accum::new();
    for (i, c) in entries {
        acc.add(i, c);
    }
    acc.finish()
}
