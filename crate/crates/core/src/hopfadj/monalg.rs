use std::sync::Arc;

use crate::bialg::{BialgMorphism, Bialgebra, RawBialgebra};
use crate::exactla::{Field, Matrix};
use crate::finmon::{FiniteMonoid, MonoidHom};

/// `K[M]`: basis the elements of `M`, all grouplike.
pub fn monoid_algebra(m: &FiniteMonoid, field: Field) -> Bialgebra {
    let n = m.order();
    let one = field.one();
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mul.push(vec![(m.mul(i, j), one.clone())]);
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[m.identity()] = one.clone();
    let comul = (0..n).map(|i| vec![(i * n + i, one.clone())]).collect();
    Bialgebra::from_trusted(RawBialgebra { field, labels: m.labels().to_vec(), mul, unit, comul, counit: vec![one; n] })
}

/// `K[φ]` between freshly built monoid algebras.
pub fn monoid_algebra_map(phi: &MonoidHom, field: Field) -> BialgMorphism {
    let source = Arc::new(monoid_algebra(phi.source(), field));
    let target = Arc::new(monoid_algebra(phi.target(), field));
    monoid_algebra_map_between(phi, source, target)
}

/// `K[φ]` with caller-supplied source and target, which must be the monoid algebras of φ's ends.
pub fn monoid_algebra_map_between(phi: &MonoidHom, source: Arc<Bialgebra>, target: Arc<Bialgebra>) -> BialgMorphism {
    let field = source.field();
    let matrix =
        Matrix::from_fn(
            field,
            target.dim(),
            source.dim(),
            |r, c| {
                if phi.apply(c) == r {
                    field.one()
                } else {
                    field.zero()
                }
            },
        );
    BialgMorphism::from_trusted(matrix, source, target)
}
