use std::sync::Arc;

use super::{grouplikes, monoid_algebra, GrouplikeSet, HopfError};
use crate::bialg::{check_morphism, BialgMorphism, Bialgebra};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::finmon::MonoidHom;

/// `{x : Δx ∈ W ⊗ B + B ⊗ W₀}` as the kernel of `(P ⊗ P₀) ∘ Δ`.
fn wedge(b: &Bialgebra, w: &Subspace, w0: &Subspace) -> Result<Subspace, HopfError> {
    let n = b.dim();
    let p = w.annihilator();
    let p0 = w0.annihilator();
    let rows = p.rows() * p0.rows();
    let field = b.field();
    let mut m = Matrix::zeros(field, rows, n);
    for i in 0..n {
        for (jk, c) in b.coproduct_of_basis(i) {
            let (j, k) = (jk / n, jk % n);
            for r in 0..p.rows() {
                let prj = p.get(r, j);
                if prj.is_zero() {
                    continue;
                }
                for s in 0..p0.rows() {
                    let ps = p0.get(s, k);
                    if ps.is_zero() {
                        continue;
                    }
                    let row = r * p0.rows() + s;
                    let v = m.get(row, i) + &(c * &(prj * ps));
                    m.set(row, i, v);
                }
            }
        }
    }
    Ok(Subspace::span(field, n, &m.nullspace())?)
}

/// Fixpoint of the wedge chain starting at `span{g}`.
pub fn irreducible_component(b: &Bialgebra, g: &[Scalar]) -> Result<Subspace, HopfError> {
    if !b.is_cocommutative() {
        return Err(HopfError::NotCocommutative);
    }
    let w0 = Subspace::span(b.field(), b.dim(), &[g.to_vec()])?;
    let mut w = w0.clone();
    for _ in 0..=b.dim() {
        let next = wedge(b, &w, &w0)?;
        if next == w {
            return Ok(w);
        }
        w = next;
    }
    Err(HopfError::Internal("wedge chain did not stabilise within the dimension bound".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub grouplikes: GrouplikeSet,
    /// `components[i]` contains grouplike `i`.
    pub components: Vec<Subspace>,
}

pub fn component_decomposition(b: &Arc<Bialgebra>) -> Result<ComponentDecomposition, HopfError> {
    let gl = grouplikes(b)?;
    let components = gl.elements().iter().map(|g| irreducible_component(b, g)).collect::<Result<Vec<_>, _>>()?;
    let covered: usize = components.iter().map(Subspace::dim).sum();
    let mut total = Subspace::zero(b.field(), b.dim());
    for c in &components {
        total = total.sum(c)?;
    }
    if covered != b.dim() || !total.is_full() {
        return Err(HopfError::NotPointed { covered: total.dim(), dim: b.dim() });
    }
    Ok(ComponentDecomposition { grouplikes: gl, components })
}

/// `ε_B : K[G(B)] → B`, sending each basis grouplike to itself.
pub fn adjunction_counit(gl: &GrouplikeSet) -> Result<BialgMorphism, HopfError> {
    let b = gl.host();
    let source = Arc::new(monoid_algebra(gl.monoid(), b.field()));
    let matrix = Matrix::from_columns(b.field(), b.dim(), gl.elements());
    Ok(check_morphism(matrix, source, b.clone())?)
}

/// `π_B : B → K[G(B)]` with `π(x) = ε(x)·ĝ` for `x` in the component of `g`, checked as a morphism.
pub fn retraction(decomp: &ComponentDecomposition) -> Result<BialgMorphism, HopfError> {
    let gl = &decomp.grouplikes;
    let b = gl.host();
    let field = b.field();
    let n = b.dim();
    let mut columns = Vec::with_capacity(n);
    let mut owner = Vec::with_capacity(n);
    for (g, comp) in decomp.components.iter().enumerate() {
        for v in comp.basis() {
            columns.push(v.clone());
            owner.push(g);
        }
    }
    let change = Matrix::from_columns(field, n, &columns);
    let inverse = change.inverse().ok_or_else(|| HopfError::Internal("components are not independent".into()))?;
    let collapse =
        Matrix::from_fn(field, gl.len(), n, |g, c| if owner[c] == g { b.counit_of(&columns[c]) } else { field.zero() });
    let matrix = collapse.compose(&inverse)?;
    let target = Arc::new(monoid_algebra(gl.monoid(), field));
    check_morphism(matrix, b.clone(), target)
        .map_err(|e| HopfError::Internal(format!("retraction is not a morphism: {e}")))
}

/// `G(h)` between the grouplike monoids of the source and target.
pub fn apply_g(h: &BialgMorphism) -> Result<MonoidHom, HopfError> {
    let src = grouplikes(h.source())?;
    let tgt = grouplikes(h.target())?;
    apply_g_between(h, &src, &tgt)
}

pub fn apply_g_between(h: &BialgMorphism, src: &GrouplikeSet, tgt: &GrouplikeSet) -> Result<MonoidHom, HopfError> {
    let map = src
        .elements()
        .iter()
        .map(|x| {
            let y = h.apply(x);
            tgt.index_of(&y)
                .ok_or_else(|| HopfError::Internal(format!("image of {} is not grouplike", h.source().describe(x))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MonoidHom::new(src.monoid().clone(), tgt.monoid().clone(), map)?)
}
