use super::{Field, LinAlgError, Matrix, Scalar};

/// A subspace of `field^ambient_dim`, stored as its reduced row-echelon basis.
///
/// The echelon basis is canonical, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        let id = Matrix::identity(field, ambient_dim);
        Subspace { field, ambient_dim, basis: id.row_vectors(), pivots: (0..ambient_dim).collect() }
    }

    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self, LinAlgError> {
        if vectors.is_empty() {
            return Ok(Self::zero(field, ambient_dim));
        }
        let m = Matrix::from_rows(field, vectors.to_vec(), ambient_dim)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field: m.field(), ambient_dim: m.cols(), basis, pivots }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: Field, ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient_dim];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient_dim, basis, pivots: idx }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as a `dim x ambient_dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_fn(self.field, self.dim(), self.ambient_dim, |r, c| self.basis[r][c].clone())
    }

    /// Coordinates of `v` in the echelon basis, `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *slot = &*slot - &(c * x);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::MixedFields(self.field, other.field));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, &rows)
    }

    /// Intersection via the kernel of the stacked bases: `sum a_i u_i = sum b_j v_j`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        let (du, dv) = (self.dim(), other.dim());
        let stacked = Matrix::from_fn(self.field, self.ambient_dim, du + dv, |r, c| {
            if c < du {
                self.basis[c][r].clone()
            } else {
                other.basis[c - du][r].clone()
            }
        });
        let vectors: Vec<Vec<Scalar>> = stacked
            .nullspace()
            .into_iter()
            .map(|coeffs| combine(self.field, self.ambient_dim, &coeffs[..du], &self.basis))
            .collect();
        Subspace::span(self.field, self.ambient_dim, &vectors)
    }

    /// Matrix `P` with `ker P` equal to this subspace; `(ambient - dim) x ambient`.
    pub fn annihilator(&self) -> Matrix {
        let rows = if self.dim() == 0 {
            Matrix::identity(self.field, self.ambient_dim).row_vectors()
        } else {
            self.basis_matrix().nullspace()
        };
        Matrix::from_fn(self.field, rows.len(), self.ambient_dim, |r, c| rows[r][c].clone())
    }

    /// First standard basis vector outside the subspace.
    pub fn first_missing_coordinate(&self) -> Option<usize> {
        (0..self.ambient_dim).find(|&i| {
            let mut e = vec![self.field.zero(); self.ambient_dim];
            e[i] = self.field.one();
            !self.contains(&e)
        })
    }
}

pub(crate) fn combine(field: Field, n: usize, coeffs: &[Scalar], vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (slot, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *slot = &*slot + &(c * x);
            }
        }
    }
    out
}
