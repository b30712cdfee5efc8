use super::{BialgError, Bialgebra};
use crate::exactla::sparse::{to_dense, to_sparse, Accum, SparseVec};
use crate::exactla::{Field, Matrix, Scalar};

/// A finite-dimensional unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub field: Field,
    pub labels: Vec<String>,
    /// `mul[i * n + j]` is `a_i a_j`.
    pub mul: Vec<SparseVec>,
    pub unit: Vec<Scalar>,
}

impl FiniteAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut acc = Accum::new();
        for (i, a) in to_sparse(u) {
            for (j, b) in to_sparse(v) {
                acc.add_scaled(&self.mul[i * n + j], &(&a * &b));
            }
        }
        to_dense(self.field, n, &acc.finish())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Matrix {
        let columns: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.multiply(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &columns)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.mul[i * n + j] == self.mul[j * n + i]))
    }

    /// Re-checks associativity and unitality.
    pub fn check(&self) -> Result<(), BialgError> {
        let n = self.dim();
        for i in 0..n {
            let ei = self.basis_vector(i);
            if self.multiply(&self.unit, &ei) != ei || self.multiply(&ei, &self.unit) != ei {
                return Err(BialgError::Shape(format!("dual unit fails at {}", self.labels[i])));
            }
            for j in 0..n {
                let ij = to_dense(self.field, n, &self.mul[i * n + j]);
                for k in 0..n {
                    let ek = self.basis_vector(k);
                    let jk = to_dense(self.field, n, &self.mul[j * n + k]);
                    if self.multiply(&ij, &ek) != self.multiply(&ei, &jk) {
                        return Err(BialgError::Shape(format!(
                            "dual associativity fails at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The dual algebra `B*` on the dual basis `δ_i`: `δ_j δ_k = Σ_i Δ_i^{jk} δ_i`, unit `ε`.
pub fn dual_algebra(b: &Bialgebra) -> Result<FiniteAlgebra, BialgError> {
    let n = b.dim();
    let mut mul = vec![Accum::new(); n * n];
    for i in 0..n {
        for (jk, c) in b.coproduct_of_basis(i) {
            mul[*jk].add(i, c.clone());
        }
    }
    let algebra = FiniteAlgebra {
        field: b.field(),
        labels: b.labels().iter().map(|l| format!("δ_{l}")).collect(),
        mul: mul.into_iter().map(Accum::finish).collect(),
        unit: b.counit().to_vec(),
    };
    algebra.check()?;
    Ok(algebra)
}
