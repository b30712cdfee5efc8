use std::sync::Arc;

use super::*;
use crate::bialg::{check_bialgebra, BialgMorphism, Bialgebra, RawBialgebra};
use crate::exactla::{Field, Matrix, Scalar, Subspace};
use crate::finmon::{enumerate_homs, FiniteMonoid, MonoidHom, ENUMERATION_GUARD};

const Q: Field = Field::Rational;

fn monoids() -> Vec<Arc<FiniteMonoid>> {
    let c2 = FiniteMonoid::cyclic(2);
    vec![
        FiniteMonoid::trivial(),
        c2.clone(),
        FiniteMonoid::cyclic(3),
        c2.product(&c2),
        FiniteMonoid::symmetric3(),
        FiniteMonoid::idempotent(),
        FiniteMonoid::flip_flop(),
    ]
    .into_iter()
    .map(Arc::new)
    .collect()
}

fn dual_numbers() -> Arc<Bialgebra> {
    let f = Field::Prime(2);
    let one = f.one();
    Arc::new(
        check_bialgebra(RawBialgebra {
            field: f,
            labels: vec!["1".into(), "x".into()],
            mul: vec![vec![(0, one.clone())], vec![(1, one.clone())], vec![(1, one.clone())], vec![]],
            unit: vec![one.clone(), f.zero()],
            comul: vec![vec![(0, one.clone())], vec![(1, one.clone()), (2, one.clone())]],
            counit: vec![one, f.zero()],
        })
        .unwrap(),
    )
}

/// Functions on a finite group; its grouplikes are the characters.
fn function_algebra(m: &FiniteMonoid, field: Field) -> Arc<Bialgebra> {
    let n = m.order();
    let one = field.one();
    let mut comul = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            comul[m.mul(a, b)].push((a * n + b, one.clone()));
        }
    }
    let mut counit = vec![field.zero(); n];
    counit[m.identity()] = one.clone();
    Arc::new(
        check_bialgebra(RawBialgebra {
            field,
            labels: m.labels().iter().map(|l| format!("δ_{l}")).collect(),
            mul: (0..n * n).map(|k| if k / n == k % n { vec![(k / n, one.clone())] } else { vec![] }).collect(),
            unit: vec![one; n],
            comul,
            counit,
        })
        .unwrap(),
    )
}

#[test]
fn monoid_algebra_examples() {
    let k = monoid_algebra(&FiniteMonoid::trivial(), Q);
    assert_eq!(k.raw(), Bialgebra::trivial(Q).raw());
    let m2 = Arc::new(monoid_algebra(&FiniteMonoid::idempotent(), Q));
    assert_eq!(m2.dim(), 2);
    let e = m2.basis_vector(1);
    assert_eq!(m2.multiply(&e, &e), e);
    assert!(is_grouplike(&m2, &e));
    for m in monoids() {
        let b = monoid_algebra(&m, Q);
        let checked = check_bialgebra(b.raw().clone()).unwrap();
        assert!(checked.is_cocommutative());
    }
}

#[test]
fn grouplikes_of_monoid_algebras_recover_the_monoid() {
    for field in [Q, Field::Prime(5)] {
        for m in monoids() {
            let b = Arc::new(monoid_algebra(&m, field));
            let gl = grouplikes(&b).unwrap();
            assert_eq!(gl.len(), m.order(), "{m}");
            assert!(gl.monoid().matches_by_labels(&m), "{m}");
            assert_eq!(gl.span().dim(), gl.len());
        }
    }
}

#[test]
fn grouplikes_small_cases() {
    let k = Arc::new(Bialgebra::trivial(Q));
    assert_eq!(grouplikes(&k).unwrap().elements(), &[vec![Q.one()]]);
    let d = dual_numbers();
    let gl = grouplikes(&d).unwrap();
    assert_eq!(gl.elements(), &[d.unit().to_vec()]);
    assert_eq!(gl.caveat(), FIELD_CAVEAT);
}

#[test]
fn characters_appear_only_when_rational() {
    let c2 = FiniteMonoid::cyclic(2);
    let gl = grouplikes(&function_algebra(&c2, Q)).unwrap();
    assert_eq!(gl.len(), 2);
    assert!(gl.monoid().is_group());
    let c3 = FiniteMonoid::cyclic(3);
    assert_eq!(grouplikes(&function_algebra(&c3, Q)).unwrap().len(), 1);
    assert_eq!(grouplikes(&function_algebra(&c3, Field::Prime(7))).unwrap().len(), 3);
    let s3 = FiniteMonoid::symmetric3();
    // trivial and sign characters
    assert_eq!(grouplikes(&function_algebra(&s3, Q)).unwrap().len(), 2);
}

#[test]
fn antipode_examples() {
    let c2 = Arc::new(monoid_algebra(&FiniteMonoid::cyclic(2), Q));
    let r = antipode(&c2).unwrap();
    assert_eq!(r.antipode, Some(Matrix::identity(Q, 2)));

    let m2 = Arc::new(monoid_algebra(&FiniteMonoid::idempotent(), Q));
    let r = antipode(&m2).unwrap();
    assert!(r.antipode.is_none());
    assert_eq!(r.witness, Some(1));

    let s3m = FiniteMonoid::symmetric3();
    let s3 = Arc::new(monoid_algebra(&s3m, Q));
    let s = antipode(&s3).unwrap().antipode.unwrap();
    let inv = s3m.inverses().unwrap();
    for (i, &j) in inv.iter().enumerate() {
        assert_eq!(s.column(i), s3.basis_vector(j));
    }
    assert!(!is_hopf(&Arc::new(monoid_algebra(&FiniteMonoid::flip_flop(), Q))).unwrap());
    assert!(is_hopf(&dual_numbers()).unwrap());
    assert!(is_hopf(&function_algebra(&FiniteMonoid::cyclic(3), Q)).unwrap());
}

#[test]
fn sweedler_dichotomy_on_monoid_algebras() {
    for field in [Q, Field::Prime(5)] {
        for m in monoids() {
            let b = Arc::new(monoid_algebra(&m, field));
            let gl = grouplikes(&b).unwrap();
            assert_eq!(is_hopf(&b).unwrap(), gl.monoid().is_group(), "{m}");
        }
    }
}

#[test]
fn irreducible_components() {
    let c2 = monoid_algebra(&FiniteMonoid::cyclic(2), Q);
    let g = c2.basis_vector(1);
    assert_eq!(irreducible_component(&c2, &g).unwrap(), Subspace::coordinate(Q, 2, [1]));
    let d = dual_numbers();
    assert!(irreducible_component(&d, d.unit()).unwrap().is_full());
    let m2 = monoid_algebra(&FiniteMonoid::idempotent(), Q);
    assert_eq!(irreducible_component(&m2, &m2.basis_vector(0)).unwrap(), Subspace::coordinate(Q, 2, [0]));
    assert_eq!(irreducible_component(&m2, &m2.basis_vector(1)).unwrap(), Subspace::coordinate(Q, 2, [1]));
    let ff = function_algebra(&FiniteMonoid::symmetric3(), Q);
    assert!(matches!(irreducible_component(&ff, ff.unit()), Err(HopfError::NotCocommutative)));
}

#[test]
fn component_products_land_in_product_component() {
    for m in monoids() {
        let b = Arc::new(monoid_algebra(&m, Q));
        let dec = component_decomposition(&b).unwrap();
        let gl = &dec.grouplikes;
        for i in 0..gl.len() {
            for j in 0..gl.len() {
                let k = gl.monoid().mul(i, j);
                for u in dec.components[i].basis() {
                    for v in dec.components[j].basis() {
                        assert!(dec.components[k].contains(&b.multiply(u, v)));
                    }
                }
            }
        }
    }
}

#[test]
fn retraction_examples() {
    for m in monoids() {
        let b = Arc::new(monoid_algebra(&m, Q));
        let dec = component_decomposition(&b).unwrap();
        let pi = retraction(&dec).unwrap();
        assert!(pi.matrix() == &Matrix::identity(Q, m.order()));
        let counit = adjunction_counit(&dec.grouplikes).unwrap();
        assert!(pi.compose(&counit).unwrap().is_identity());
        assert!(apply_g(&pi).unwrap().is_identity());
    }
    let d = dual_numbers();
    let dec = component_decomposition(&d).unwrap();
    let pi = retraction(&dec).unwrap();
    assert_eq!(pi.target().dim(), 1);
    let f = Field::Prime(2);
    assert_eq!(pi.matrix(), &Matrix::from_rows(f, vec![vec![f.one(), f.zero()]], 2).unwrap());
    assert!(pi.compose(&adjunction_counit(&dec.grouplikes).unwrap()).unwrap().is_identity());
}

#[test]
fn non_pointed_input_is_reported() {
    let b = function_algebra(&FiniteMonoid::cyclic(3), Q);
    // cocommutative since C3 is abelian, but two characters are irrational
    assert!(b.is_cocommutative());
    assert!(matches!(component_decomposition(&b), Err(HopfError::NotPointed { covered: 1, dim: 3 })));
    assert!(component_decomposition(&function_algebra(&FiniteMonoid::cyclic(3), Field::Prime(7))).is_ok());
}

fn all_homs() -> Vec<MonoidHom> {
    let ms = monoids();
    let mut out = Vec::new();
    for x in &ms {
        for y in &ms {
            out.extend(enumerate_homs(x, y, ENUMERATION_GUARD).unwrap());
        }
    }
    out
}

#[test]
fn apply_g_inverts_monoid_algebra_and_preserves_monos() {
    for phi in all_homs() {
        let h = monoid_algebra_map(&phi, Q);
        let back = apply_g(&h).unwrap();
        assert_eq!(back.map(), phi.map());
        if phi.is_injective() {
            assert_eq!(h.matrix().rank(), phi.source().order());
        }
    }
    let b = Arc::new(monoid_algebra(&FiniteMonoid::symmetric3(), Q));
    assert!(apply_g(&BialgMorphism::identity(b)).unwrap().is_identity());
}

#[test]
fn functoriality_and_naturality() {
    let homs = all_homs();
    for phi in &homs {
        for psi in homs.iter().filter(|p| p.target() == phi.source()) {
            let composite = monoid_algebra_map(&phi.compose(psi).unwrap(), Q);
            let separately = monoid_algebra_map(phi, Q).compose(&monoid_algebra_map(psi, Q)).unwrap();
            assert_eq!(composite, separately);
        }
        let h = monoid_algebra_map(phi, Q);
        let pi_src = retraction(&component_decomposition(h.source()).unwrap()).unwrap();
        let pi_tgt = retraction(&component_decomposition(h.target()).unwrap()).unwrap();
        let gh = apply_g(&h).unwrap();
        let kgh = monoid_algebra_map_between(&gh, pi_src.target().clone(), pi_tgt.target().clone());
        assert_eq!(pi_tgt.compose(&h).unwrap(), kgh.compose(&pi_src).unwrap());
    }
}

#[test]
fn grouplike_vectors_are_exact() {
    let b = function_algebra(&FiniteMonoid::cyclic(2), Q);
    let gl = grouplikes(&b).unwrap();
    let half: Vec<Vec<Scalar>> = gl.elements().to_vec();
    assert!(half.contains(&vec![Q.one(), Q.one()]));
    assert!(half.contains(&vec![Q.one(), Q.from_i64(-1)]));
}
