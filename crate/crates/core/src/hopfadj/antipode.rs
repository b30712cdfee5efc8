use std::sync::Arc;

use super::HopfError;
use crate::bialg::Bialgebra;
use crate::exactla::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeResult {
    pub host: Arc<Bialgebra>,
    /// `S` with one column per basis element.
    pub antipode: Option<Matrix>,
    /// First basis index whose equations make the system inconsistent.
    pub witness: Option<usize>,
}

impl AntipodeResult {
    pub fn is_hopf(&self) -> bool {
        self.antipode.is_some()
    }
}

/// Rows for the equations `μ(S⊗1)Δb_i = ε(b_i)1 = μ(1⊗S)Δb_i`, unknown `S_{rc}` at `r * n + c`.
fn equations_for(b: &Bialgebra, i: usize) -> (Vec<Vec<Scalar>>, Vec<Scalar>) {
    let n = b.dim();
    let field = b.field();
    let mut left = vec![vec![field.zero(); n * n]; n];
    let mut right = vec![vec![field.zero(); n * n]; n];
    for (jk, c) in b.coproduct_of_basis(i) {
        let (j, k) = (jk / n, jk % n);
        for r in 0..n {
            // S(b_j) b_k picks S_{rj} b_r b_k
            for (t, m) in b.product_of_basis(r, k) {
                let slot = &mut left[*t][r * n + j];
                *slot = &*slot + &(c * m);
            }
            for (t, m) in b.product_of_basis(j, r) {
                let slot = &mut right[*t][r * n + k];
                *slot = &*slot + &(c * m);
            }
        }
    }
    let rhs: Vec<Scalar> = b.unit().iter().map(|u| u * &b.counit()[i]).collect();
    left.extend(right);
    let mut both_rhs = rhs.clone();
    both_rhs.extend(rhs);
    (left, both_rhs)
}

fn solve_upto(
    b: &Bialgebra,
    blocks: &[(Vec<Vec<Scalar>>, Vec<Scalar>)],
    upto: usize,
) -> Result<Option<Vec<Scalar>>, HopfError> {
    let n = b.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (r, v) in &blocks[..upto] {
        rows.extend(r.iter().cloned());
        rhs.extend(v.iter().cloned());
    }
    let a = Matrix::from_rows(b.field(), rows, n * n)?;
    Ok(a.solve(&rhs)?)
}

/// Solves for an antipode imposing both convolution identities at once.
pub fn antipode(b: &Arc<Bialgebra>) -> Result<AntipodeResult, HopfError> {
    let n = b.dim();
    let blocks: Vec<_> = (0..n).map(|i| equations_for(b, i)).collect();
    if let Some(x) = solve_upto(b, &blocks, n)? {
        let s = Matrix::from_fn(b.field(), n, n, |r, c| x[r * n + c].clone());
        verify(b, &s)?;
        return Ok(AntipodeResult { host: b.clone(), antipode: Some(s), witness: None });
    }
    // consistency is monotone in the number of blocks
    let (mut lo, mut hi) = (0, n);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if solve_upto(b, &blocks, mid)?.is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(AntipodeResult { host: b.clone(), antipode: None, witness: Some(hi - 1) })
}

pub fn is_hopf(b: &Arc<Bialgebra>) -> Result<bool, HopfError> {
    Ok(antipode(b)?.is_hopf())
}

/// Re-checks `μ(S⊗1)Δ = ηε = μ(1⊗S)Δ` on every basis element.
pub fn verify(b: &Bialgebra, s: &Matrix) -> Result<(), HopfError> {
    let n = b.dim();
    let columns: Vec<Vec<Scalar>> = (0..n).map(|c| s.column(c)).collect();
    for i in 0..n {
        let mut left = vec![b.field().zero(); n];
        let mut right = vec![b.field().zero(); n];
        for (jk, c) in b.coproduct_of_basis(i) {
            let (j, k) = (jk / n, jk % n);
            let l = b.multiply(&columns[j], &b.basis_vector(k));
            let r = b.multiply(&b.basis_vector(j), &columns[k]);
            for t in 0..n {
                left[t] = &left[t] + &(c * &l[t]);
                right[t] = &right[t] + &(c * &r[t]);
            }
        }
        let expected: Vec<Scalar> = b.unit().iter().map(|u| u * &b.counit()[i]).collect();
        if left != expected || right != expected {
            return Err(HopfError::Internal(format!("antipode identity fails at {}", b.label(i))));
        }
    }
    Ok(())
}
