use std::fmt;
use std::sync::Arc;

use super::{BialgError, Bialgebra};
use crate::exactla::sparse::{to_sparse, Accum, SparseVec};
use crate::exactla::{Matrix, Scalar, Subspace};

/// The structure maps a morphism must respect, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismLaw {
    Mul,
    Unit,
    Comul,
    Counit,
}

impl fmt::Display for MorphismLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismLaw::Mul => "mul",
            MorphismLaw::Unit => "unit",
            MorphismLaw::Comul => "comul",
            MorphismLaw::Counit => "counit",
        })
    }
}

/// A linear map between bialgebras respecting all four structure maps.
///
/// The matrix has one column per source basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BialgMorphism {
    source: Arc<Bialgebra>,
    target: Arc<Bialgebra>,
    matrix: Matrix,
}

pub fn check_morphism(
    matrix: Matrix,
    source: Arc<Bialgebra>,
    target: Arc<Bialgebra>,
) -> Result<BialgMorphism, BialgError> {
    if source.field() != target.field() {
        return Err(BialgError::FieldMismatch(source.field(), target.field()));
    }
    if matrix.field() != source.field() {
        return Err(BialgError::FieldMismatch(matrix.field(), source.field()));
    }
    if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
        return Err(BialgError::DimensionMismatch(format!(
            "matrix is {}x{}, expected {}x{}",
            matrix.rows(),
            matrix.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let h = BialgMorphism { source, target, matrix };
    if let Some((law, witness)) = h.first_violation() {
        return Err(BialgError::Morphism { law, witness });
    }
    Ok(h)
}

impl BialgMorphism {
    /// Wraps a matrix produced by a construction known to be a morphism.
    pub(crate) fn from_trusted(matrix: Matrix, source: Arc<Bialgebra>, target: Arc<Bialgebra>) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.dim(), source.dim()));
        BialgMorphism { source, target, matrix }
    }

    pub fn identity(b: Arc<Bialgebra>) -> Self {
        let matrix = Matrix::identity(b.field(), b.dim());
        BialgMorphism { source: b.clone(), target: b, matrix }
    }

    /// The zero morphism `η_target ∘ ε_source`.
    pub fn zero(source: Arc<Bialgebra>, target: Arc<Bialgebra>) -> Self {
        let matrix =
            Matrix::from_fn(source.field(), target.dim(), source.dim(), |r, c| &target.unit()[r] * &source.counit()[c]);
        BialgMorphism { source, target, matrix }
    }

    /// The unit `K → B`.
    pub fn unit_of(b: Arc<Bialgebra>) -> Self {
        let k = Arc::new(Bialgebra::trivial(b.field()));
        BialgMorphism::zero(k, b)
    }

    /// The counit `B → K`.
    pub fn counit_of(b: Arc<Bialgebra>) -> Self {
        let k = Arc::new(Bialgebra::trivial(b.field()));
        BialgMorphism::zero(b, k)
    }

    pub fn source(&self) -> &Arc<Bialgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Bialgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v).expect("vector in source")
    }

    fn column_sparse(&self, c: usize) -> SparseVec {
        to_sparse(&self.matrix.column(c))
    }

    fn apply_sparse(&self, v: &[(usize, Scalar)], cols: &[SparseVec]) -> SparseVec {
        let mut acc = Accum::new();
        for (i, c) in v {
            acc.add_scaled(&cols[*i], c);
        }
        acc.finish()
    }

    fn first_violation(&self) -> Option<(MorphismLaw, String)> {
        let (x, y) = (&*self.source, &*self.target);
        let n = x.dim();
        let cols: Vec<SparseVec> = (0..n).map(|c| self.column_sparse(c)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply_sparse(x.product_of_basis(i, j), &cols);
                let rhs = y.multiply_sparse(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Some((MorphismLaw::Mul, format!("({}, {})", x.label(i), x.label(j))));
                }
            }
        }
        if self.apply(x.unit()) != y.unit() {
            return Some((MorphismLaw::Unit, "(1)".into()));
        }
        let m = y.dim();
        for i in 0..n {
            let mut lhs = Accum::new();
            for (jk, c) in x.coproduct_of_basis(i) {
                let (j, k) = (jk / n, jk % n);
                for (a, s) in &cols[j] {
                    for (b, t) in &cols[k] {
                        lhs.add(a * m + b, c * &(s * t));
                    }
                }
            }
            if lhs.finish() != y.coproduct_sparse(&cols[i]) {
                return Some((MorphismLaw::Comul, format!("({})", x.label(i))));
            }
        }
        for (i, col) in cols.iter().enumerate() {
            if y.raw().counit_of(col) != x.counit()[i] {
                return Some((MorphismLaw::Counit, format!("({})", x.label(i))));
            }
        }
        None
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &BialgMorphism) -> Result<BialgMorphism, BialgError> {
        if inner.target != self.source {
            return Err(BialgError::NotComposable);
        }
        let matrix = self.matrix.compose(&inner.matrix)?;
        Ok(BialgMorphism { source: inner.source.clone(), target: self.target.clone(), matrix })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix == Matrix::identity(self.source.field(), self.source.dim())
    }

    pub fn is_zero_morphism(&self) -> bool {
        *self == BialgMorphism::zero(self.source.clone(), self.target.clone())
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.matrix.transpose())
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.source.dim() == self.target.dim()
    }
}

impl fmt::Display for BialgMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "morphism {}-dim -> {}-dim\n{}", self.source.dim(), self.target.dim(), self.matrix)
    }
}
