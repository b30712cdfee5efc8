use std::sync::Arc;

use super::HopfError;
use crate::bialg::{describe_vector, Bialgebra};
use crate::exactla::{minimal_polynomial, roots_in_field, Matrix, Scalar, Subspace};
use crate::finmon::{check_monoid, FiniteMonoid};

/// Attached to every grouplike result: the search only sees base-field-rational solutions.
pub const FIELD_CAVEAT: &str = "base-field-rational grouplikes only";

/// The grouplike elements of a bialgebra and the monoid they form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeSet {
    host: Arc<Bialgebra>,
    elements: Vec<Vec<Scalar>>,
    monoid: Arc<FiniteMonoid>,
}

impl GrouplikeSet {
    pub fn host(&self) -> &Arc<Bialgebra> {
        &self.host
    }

    pub fn elements(&self) -> &[Vec<Scalar>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Multiplication table of the grouplikes, labelled by [`GrouplikeSet::label`].
    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn label(&self, i: usize) -> &str {
        self.monoid.label(i)
    }

    pub fn index_of(&self, v: &[Scalar]) -> Option<usize> {
        self.elements.iter().position(|g| g.as_slice() == v)
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(self.host.field(), self.host.dim(), &self.elements).expect("grouplikes live in the host")
    }

    pub fn caveat(&self) -> &'static str {
        FIELD_CAVEAT
    }
}

pub fn is_grouplike(b: &Bialgebra, x: &[Scalar]) -> bool {
    if !b.counit_of(x).is_one() {
        return false;
    }
    let n = b.dim();
    let mut square = Vec::new();
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            square.push((i * n + j, a * c));
        }
    }
    b.coproduct(x) == square
}

/// Hit operator `T_a x = (δ_a ⊗ 1) Δ x`; a grouplike `x` satisfies `T_a x = x_a x`.
fn hit_operator(b: &Bialgebra, a: usize) -> Matrix {
    let n = b.dim();
    let mut m = Matrix::zeros(b.field(), n, n);
    for i in 0..n {
        for (jk, c) in b.coproduct_of_basis(i) {
            if jk / n == a {
                m.set(jk % n, i, c.clone());
            }
        }
    }
    m
}

/// All base-field-rational grouplikes, as common eigenvectors of the hit operators.
///
/// Eigenvalues come from rational (or `F_p`) roots of minimal polynomials only,
/// so grouplikes defined over an extension field are not found.
pub fn grouplikes(b: &Arc<Bialgebra>) -> Result<GrouplikeSet, HopfError> {
    let field = b.field();
    let n = b.dim();
    let mut open = vec![Subspace::full(field, n)];
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..n {
        let mut next = Vec::new();
        for space in open {
            if space.dim() == 1 {
                found.extend(normalized(b, &space.basis()[0]));
                continue;
            }
            let t = hit_operator(b, a);
            let restricted = restrict(&t, &space);
            let roots = match &restricted {
                Some(r) => roots_in_field(&minimal_polynomial(r)?)?,
                None => roots_in_field(&minimal_polynomial(&t)?)?,
            };
            for lambda in roots {
                let shifted = t.sub(&Matrix::identity(field, n).scale(&lambda))?;
                let eigen = Subspace::span(field, n, &shifted.nullspace())?;
                let piece = space.intersect(&eigen)?;
                if piece.dim() > 0 {
                    next.push(piece);
                }
            }
        }
        open = next;
        if open.is_empty() {
            break;
        }
    }
    for space in open {
        if space.dim() > 1 {
            return Err(HopfError::Internal(format!("common eigenspace of dimension {}", space.dim())));
        }
        found.extend(normalized(b, &space.basis()[0]));
    }
    found.sort_by_cached_key(|v| {
        let lead = v.iter().position(|c| !c.is_zero());
        (lead, v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    });
    from_elements(b, found)
}

fn normalized(b: &Bialgebra, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let inv = b.counit_of(v).inv()?;
    let x: Vec<Scalar> = v.iter().map(|c| c * &inv).collect();
    is_grouplike(b, &x).then_some(x)
}

/// Matrix of `t` on `space` in its echelon basis, when `space` is invariant.
fn restrict(t: &Matrix, space: &Subspace) -> Option<Matrix> {
    let d = space.dim();
    let mut columns = Vec::with_capacity(d);
    for v in space.basis() {
        columns.push(space.coordinates(&t.apply(v).ok()?)?);
    }
    Some(Matrix::from_columns(t.field(), d, &columns))
}

/// Builds the set from already verified grouplikes, computing the induced monoid.
pub(crate) fn from_elements(b: &Arc<Bialgebra>, elements: Vec<Vec<Scalar>>) -> Result<GrouplikeSet, HopfError> {
    let labels: Vec<String> = elements.iter().map(|v| describe_vector(b.labels(), v)).collect();
    let position = |v: &[Scalar]| elements.iter().position(|g| g.as_slice() == v);
    let identity = position(b.unit()).ok_or_else(|| HopfError::Internal("unit is not among the grouplikes".into()))?;
    let mut table = Vec::with_capacity(elements.len());
    for x in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for y in &elements {
            let xy = b.multiply(x, y);
            row.push(position(&xy).ok_or_else(|| HopfError::Internal("grouplikes not closed under product".into()))?);
        }
        table.push(row);
    }
    let monoid = Arc::new(check_monoid(labels, identity, table)?);
    Ok(GrouplikeSet { host: b.clone(), elements, monoid })
}
