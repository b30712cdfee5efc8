use std::sync::Arc;

use super::{BialgError, BialgMorphism, Bialgebra, RawBialgebra};
use crate::exactla::sparse::{to_sparse, Accum, SparseVec};
use crate::exactla::{Matrix, Scalar};

/// `X ⊗ Y` with its injections and projections.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub tensor: Arc<Bialgebra>,
    pub left: Arc<Bialgebra>,
    pub right: Arc<Bialgebra>,
    /// `ι_X = (1 ⊗ η_Y) ∘ ρ⁻¹`
    pub iota_left: BialgMorphism,
    pub iota_right: BialgMorphism,
    /// `π_X = ρ ∘ (1 ⊗ ε_Y)`
    pub pi_left: BialgMorphism,
    pub pi_right: BialgMorphism,
    /// Set when a factor is not cocommutative, so `X ⊗ Y` is not the categorical product.
    pub warning: Option<String>,
}

pub fn tensor_label(a: &str, b: &str) -> String {
    format!("{a}⊗{b}")
}

pub fn tensor_bialgebra(x: &Arc<Bialgebra>, y: &Arc<Bialgebra>) -> Result<TensorProduct, BialgError> {
    if x.field() != y.field() {
        return Err(BialgError::FieldMismatch(x.field(), y.field()));
    }
    let field = x.field();
    let (nx, ny) = (x.dim(), y.dim());
    let n = nx * ny;
    let labels = (0..n).map(|p| tensor_label(x.label(p / ny), y.label(p % ny))).collect();

    let mut mul = Vec::with_capacity(n * n);
    for p in 0..n {
        let (a, b) = (p / ny, p % ny);
        for q in 0..n {
            let (c, d) = (q / ny, q % ny);
            let mut acc = Accum::new();
            for (r, s) in x.product_of_basis(a, c) {
                for (t, u) in y.product_of_basis(b, d) {
                    acc.add(r * ny + t, s * u);
                }
            }
            mul.push(acc.finish());
        }
    }

    let comul = (0..n)
        .map(|p| {
            let (a, b) = (p / ny, p % ny);
            let mut acc = Accum::new();
            for (a12, s) in x.coproduct_of_basis(a) {
                let (a1, a2) = (a12 / nx, a12 % nx);
                for (b12, t) in y.coproduct_of_basis(b) {
                    let (b1, b2) = (b12 / ny, b12 % ny);
                    acc.add((a1 * ny + b1) * n + (a2 * ny + b2), s * t);
                }
            }
            acc.finish()
        })
        .collect();

    let unit = (0..n).map(|p| &x.unit()[p / ny] * &y.unit()[p % ny]).collect();
    let counit = (0..n).map(|p| &x.counit()[p / ny] * &y.counit()[p % ny]).collect();
    let tensor = Arc::new(Bialgebra::from_trusted(RawBialgebra { field, labels, mul, unit, comul, counit }));

    let iota_left =
        Matrix::from_fn(field, n, nx, |p, a| if p / ny == a { y.unit()[p % ny].clone() } else { field.zero() });
    let iota_right =
        Matrix::from_fn(field, n, ny, |p, b| if p % ny == b { x.unit()[p / ny].clone() } else { field.zero() });
    let pi_left =
        Matrix::from_fn(field, nx, n, |a, p| if p / ny == a { y.counit()[p % ny].clone() } else { field.zero() });
    let pi_right =
        Matrix::from_fn(field, ny, n, |b, p| if p % ny == b { x.counit()[p / ny].clone() } else { field.zero() });

    let warning = (!x.is_cocommutative() || !y.is_cocommutative())
        .then(|| "a factor is not cocommutative: the tensor product is not the categorical product".to_string());

    Ok(TensorProduct {
        iota_left: BialgMorphism::from_trusted(iota_left, x.clone(), tensor.clone()),
        iota_right: BialgMorphism::from_trusted(iota_right, y.clone(), tensor.clone()),
        pi_left: BialgMorphism::from_trusted(pi_left, tensor.clone(), x.clone()),
        pi_right: BialgMorphism::from_trusted(pi_right, tensor.clone(), y.clone()),
        tensor,
        left: x.clone(),
        right: y.clone(),
        warning,
    })
}

/// Matrix of `(f ⊗ g) ∘ Δ_Z`.
fn pair_matrix(f: &BialgMorphism, g: &BialgMorphism, tp: &TensorProduct) -> Matrix {
    let z = f.source();
    let nz = z.dim();
    let ny = tp.right.dim();
    let field = z.field();
    let fcols: Vec<SparseVec> = (0..nz).map(|c| to_sparse(&f.matrix().column(c))).collect();
    let gcols: Vec<SparseVec> = (0..nz).map(|c| to_sparse(&g.matrix().column(c))).collect();
    let columns: Vec<Vec<Scalar>> = (0..nz)
        .map(|i| {
            let mut acc = Accum::new();
            for (jk, c) in z.coproduct_of_basis(i) {
                let (j, k) = (jk / nz, jk % nz);
                for (a, s) in &fcols[j] {
                    for (b, t) in &gcols[k] {
                        acc.add(a * ny + b, c * &(s * t));
                    }
                }
            }
            crate::exactla::sparse::to_dense(field, tp.tensor.dim(), &acc.finish())
        })
        .collect();
    Matrix::from_columns(field, tp.tensor.dim(), &columns)
}

/// `⟨f, g⟩ = (f ⊗ g) ∘ Δ_Z`, validated as a bialgebra morphism.
pub fn pair_into_tensor(f: &BialgMorphism, g: &BialgMorphism, tp: &TensorProduct) -> Result<BialgMorphism, BialgError> {
    if f.source() != g.source() {
        return Err(BialgError::SourceMismatch);
    }
    if f.target() != &tp.left || g.target() != &tp.right {
        return Err(BialgError::NotATensor("pair components do not land in the tensor factors".into()));
    }
    super::check_morphism(pair_matrix(f, g, tp), f.source().clone(), tp.tensor.clone())
}

/// Outcome of comparing `h` with `(π_X h ⊗ π_Y h) ∘ Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingVerdict {
    pub holds: bool,
    /// First source basis label where the columns differ.
    pub witness: Option<String>,
}

pub fn section4_identity_check(h: &BialgMorphism, tp: &TensorProduct) -> Result<PairingVerdict, BialgError> {
    if h.target() != &tp.tensor {
        return Err(BialgError::NotATensor("target is not the supplied tensor product".into()));
    }
    let f = tp.pi_left.compose(h)?;
    let g = tp.pi_right.compose(h)?;
    let paired = pair_matrix(&f, &g, tp);
    let witness = (0..h.source().dim())
        .find(|&c| paired.column(c) != h.matrix().column(c))
        .map(|c| h.source().label(c).to_string());
    Ok(PairingVerdict { holds: witness.is_none(), witness })
}
