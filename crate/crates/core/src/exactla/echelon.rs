use std::collections::BTreeMap;

use super::sparse::SparseVec;
use super::{Field, LinAlgError, Scalar, Subspace};

/// Incrementally grown row space of sparse vectors.
///
/// Rows are kept in echelon form: each has leading coefficient 1 at its pivot and
/// no entries before it. Reduction only walks entries at or after each pivot.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(field: Field, dim: usize) -> Self {
        SparseEchelon { field, dim, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Remainder of `v` after elimination; empty iff `v` is in the span.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut work: BTreeMap<usize, Scalar> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut cursor = 0;
        while let Some((&i, c)) = work.range(cursor..).next() {
            cursor = i + 1;
            let Some(row) = self.rows.get(&i) else { continue };
            let c = c.clone();
            for (j, r) in row {
                let updated = match work.get(j) {
                    Some(w) => w - &(&c * r),
                    None => -(&c * r),
                };
                if updated.is_zero() {
                    work.remove(j);
                } else {
                    work.insert(*j, updated);
                }
            }
        }
        work.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns the new normalized row when `v` was independent.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> Result<Option<SparseVec>, LinAlgError> {
        if let Some((i, c)) = v.iter().find(|(i, c)| *i >= self.dim || c.field() != self.field) {
            return Err(if *i >= self.dim {
                LinAlgError::IndexOutOfRange(format!("coordinate {i} in dimension {}", self.dim))
            } else {
                LinAlgError::MixedFields(self.field, c.field())
            });
        }
        let rem = self.reduce(v);
        let Some((pivot, lead)) = rem.first().cloned() else { return Ok(None) };
        let inv = lead.inv().expect("nonzero leading entry");
        let row: SparseVec = rem.into_iter().map(|(j, c)| (j, &c * &inv)).collect();
        self.rows.insert(pivot, row.clone());
        Ok(Some(row))
    }

    /// The spanned subspace in canonical form.
    pub fn to_subspace(&self) -> Subspace {
        let dense: Vec<Vec<Scalar>> =
            self.rows.values().map(|r| super::sparse::to_dense(self.field, self.dim, r)).collect();
        Subspace::span(self.field, self.dim, &dense).expect("rows share the ambient dimension")
    }

    /// Basis of `{x : r·x = 0 for every row r}`.
    pub fn orthogonal_complement(&self) -> Subspace {
        let reduced = self.fully_reduced();
        let field = self.field;
        let vectors: Vec<Vec<Scalar>> = (0..self.dim)
            .filter(|f| !reduced.contains_key(f))
            .map(|f| {
                let mut v = vec![field.zero(); self.dim];
                v[f] = field.one();
                for (p, row) in &reduced {
                    if let Ok(k) = row.binary_search_by_key(&f, |(j, _)| *j) {
                        v[*p] = -&row[k].1;
                    }
                }
                v
            })
            .collect();
        Subspace::span(field, self.dim, &vectors).expect("vectors share the ambient dimension")
    }

    /// Back-substituted rows: no row has an entry at another row's pivot.
    fn fully_reduced(&self) -> BTreeMap<usize, SparseVec> {
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut work: BTreeMap<usize, Scalar> = row.iter().cloned().collect();
            for (&q, lower) in &out {
                if let Some(c) = work.get(&q).cloned() {
                    for (j, r) in lower {
                        let updated = match work.get(j) {
                            Some(w) => w - &(&c * r),
                            None => -(&c * r),
                        };
                        if updated.is_zero() {
                            work.remove(j);
                        } else {
                            work.insert(*j, updated);
                        }
                    }
                }
            }
            out.insert(p, work.into_iter().collect());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::sparse::to_sparse;
    use crate::exactla::Matrix;

    fn q(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    #[test]
    fn matches_dense_row_space_and_kernel() {
        let rows = vec![
            vec![q(0), q(2), q(0), q(4), q(1)],
            vec![q(1), q(1), q(0), q(0), q(0)],
            vec![q(1), q(3), q(0), q(4), q(1)],
            vec![q(0), q(0), q(3), q(-1), q(0)],
        ];
        let mut e = SparseEchelon::new(Field::Rational, 5);
        let mut independent = 0;
        for r in &rows {
            if e.insert(&to_sparse(r)).unwrap().is_some() {
                independent += 1;
            }
        }
        let m = Matrix::from_rows(Field::Rational, rows, 5).unwrap();
        assert_eq!(independent, m.rank());
        assert_eq!(e.to_subspace(), Subspace::from_matrix_rows(&m));
        let kernel = Subspace::span(Field::Rational, 5, &m.nullspace()).unwrap();
        assert_eq!(e.orthogonal_complement(), kernel);
        assert!(e.contains(&to_sparse(&[q(2), q(4), q(0), q(4), q(1)])));
        assert!(!e.contains(&[(4, q(1))]));
    }

    #[test]
    fn rejects_out_of_range() {
        let mut e = SparseEchelon::new(Field::Prime(3), 2);
        assert!(e.insert(&[(2, Field::Prime(3).one())]).is_err());
        assert!(e.insert(&[(0, q(1))]).is_err());
    }
}
