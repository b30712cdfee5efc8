use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bialg::{check_bialgebra, tensor_bialgebra, BialgMorphism, Bialgebra, RawBialgebra};
use crate::exactla::{Field, Matrix, Scalar, Subspace};
use crate::finmon::{enumerate_homs, kernel_mon, pullback_mon, FiniteMonoid, MonoidHom, ENUMERATION_GUARD};
use crate::hopfadj::{grouplikes, monoid_algebra, monoid_algebra_map, monoid_algebra_map_between};

const Q: Field = Field::Rational;

fn alg(m: &FiniteMonoid) -> Arc<Bialgebra> {
    Arc::new(monoid_algebra(m, Q))
}

fn c2() -> FiniteMonoid {
    FiniteMonoid::cyclic(2)
}

fn m2() -> FiniteMonoid {
    FiniteMonoid::idempotent()
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

fn function_algebra(m: &FiniteMonoid) -> Arc<Bialgebra> {
    let n = m.order();
    let one = Q.one();
    let mut comul = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            comul[m.mul(a, b)].push((a * n + b, one.clone()));
        }
    }
    let mut counit = vec![Q.zero(); n];
    counit[m.identity()] = one.clone();
    Arc::new(
        check_bialgebra(RawBialgebra {
            field: Q,
            labels: m.labels().iter().map(|l| format!("δ_{l}")).collect(),
            mul: (0..n * n).map(|k| if k / n == k % n { vec![(k / n, one.clone())] } else { vec![] }).collect(),
            unit: vec![one; n],
            comul,
            counit,
        })
        .unwrap(),
    )
}

fn random_subspace(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Subspace {
    let count = rng.random_range(0..=n);
    let vectors: Vec<Vec<Scalar>> = (0..count)
        .map(|_| {
            (0..n)
                .map(|_| if rng.random_bool(0.5) { field.zero() } else { field.from_i64(rng.random_range(-2..=2)) })
                .collect()
        })
        .collect();
    Subspace::span(field, n, &vectors).unwrap()
}

/// Oracle: iterate `D(V) = {c : (Δ⊗1)Δc ∈ B⊗V⊗B}` straight from the triple coproduct.
fn triple_tensor_oracle(b: &Bialgebra, v: &Subspace) -> Subspace {
    let n = b.dim();
    let field = b.field();
    let mut current = v.clone();
    loop {
        let p = current.annihilator();
        let rows = n * p.rows() * n;
        let mut m = Matrix::zeros(field, rows, n);
        for c in 0..n {
            for (jk, x) in b.coproduct_of_basis(c) {
                let (j, k) = (jk / n, jk % n);
                for (ab, y) in b.coproduct_of_basis(j) {
                    let (a, mid) = (ab / n, ab % n);
                    for r in 0..p.rows() {
                        let coeff = &(x * y) * p.get(r, mid);
                        if coeff.is_zero() {
                            continue;
                        }
                        let row = (a * p.rows() + r) * n + k;
                        let val = m.get(row, c) + &coeff;
                        m.set(row, c, val);
                    }
                }
            }
        }
        let next = Subspace::span(field, n, &m.nullspace()).unwrap().intersect(&current).unwrap();
        if next == current {
            return current;
        }
        current = next;
    }
}

#[test]
fn largest_subcoalgebra_examples() {
    let b = alg(&c2());
    let full = Subspace::full(Q, 2);
    assert_eq!(largest_subcoalgebra_in(&b, &full).unwrap(), full);
    let g = Subspace::coordinate(Q, 2, [1]);
    assert_eq!(largest_subcoalgebra_in(&b, &g).unwrap(), g);
    let one_plus_g = Subspace::span(Q, 2, &[vec![Q.one(), Q.one()]]).unwrap();
    assert_eq!(largest_subcoalgebra_in(&b, &one_plus_g).unwrap().dim(), 0);
}

#[test]
fn grouplike_subset_oracle_on_group_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in [c2(), FiniteMonoid::cyclic(3), c2().product(&c2())] {
        let b = alg(&m);
        let n = m.order();
        for mask in 0u32..(1 << n) {
            let v = Subspace::coordinate(Q, n, (0..n).filter(|i| mask >> i & 1 == 1));
            assert_eq!(largest_subcoalgebra_in(&b, &v).unwrap(), v);
        }
        for _ in 0..40 {
            let v = random_subspace(&mut rng, Q, n);
            let members: Vec<usize> = (0..n).filter(|&i| v.contains(&b.basis_vector(i))).collect();
            assert_eq!(largest_subcoalgebra_in(&b, &v).unwrap(), Subspace::coordinate(Q, n, members));
        }
    }
}

#[test]
fn matches_triple_tensor_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let d = dual_numbers();
    let dd = tensor_bialgebra(&d, &d).unwrap().tensor;
    let cases: Vec<Arc<Bialgebra>> = vec![
        alg(&m2()),
        alg(&FiniteMonoid::flip_flop()),
        d,
        dd,
        function_algebra(&FiniteMonoid::symmetric3()),
        function_algebra(&FiniteMonoid::flip_flop()),
    ];
    for b in &cases {
        for _ in 0..15 {
            let v = random_subspace(&mut rng, b.field(), b.dim());
            let ours = largest_subcoalgebra_in(b, &v).unwrap();
            assert_eq!(ours, triple_tensor_oracle(b, &v));
        }
        // large subspaces are where the interesting closures happen
        for i in 0..b.dim() {
            let mut rows = Subspace::full(b.field(), b.dim()).basis().to_vec();
            rows.remove(i);
            let v = Subspace::span(b.field(), b.dim(), &rows).unwrap();
            assert_eq!(largest_subcoalgebra_in(b, &v).unwrap(), triple_tensor_oracle(b, &v));
        }
    }
}

#[test]
fn monotone_and_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let b = alg(&m2().product(&m2()));
    for _ in 0..100 {
        let v = random_subspace(&mut rng, Q, 4);
        let w = v.sum(&random_subspace(&mut rng, Q, 4)).unwrap();
        let dv = largest_subcoalgebra_in(&b, &v).unwrap();
        let dw = largest_subcoalgebra_in(&b, &w).unwrap();
        assert!(dv.is_subspace_of(&dw));
        assert_eq!(largest_subcoalgebra_in(&b, &dv).unwrap(), dv);
        assert!(is_subcoalgebra(&b, &dv));
    }
}

#[test]
fn equalizer_examples() {
    let b = alg(&c2());
    let id = BialgMorphism::identity(b.clone());
    assert_eq!(equalizer_coc(&id, &id).unwrap().dim(), 2);
    let zero = BialgMorphism::zero(b.clone(), b.clone());
    let eq = equalizer_coc(&id, &zero).unwrap();
    assert_eq!(eq.sub.space, Subspace::coordinate(Q, 2, [0]));

    let c22 = Arc::new(c2().product(&c2()));
    let c2a = Arc::new(c2());
    let p1 = monoid_algebra_map(&MonoidHom::first_projection(c22.clone(), c2a.clone(), &c2a).unwrap(), Q);
    let p2 = monoid_algebra_map(&MonoidHom::second_projection(c22.clone(), c2a.clone()).unwrap(), Q);
    let eq = equalizer_coc(&p1, &p2).unwrap();
    assert_eq!(eq.sub.space, Subspace::coordinate(Q, 4, [0, 3]));
    assert_eq!(eq.object.labels(), ["(1,1)", "(g,g)"]);

    let mut candidates = Vec::new();
    for m in [FiniteMonoid::trivial(), c2(), c2().product(&c2()), m2()] {
        let m = Arc::new(m);
        for phi in enumerate_homs(&m, &c22, ENUMERATION_GUARD).unwrap() {
            candidates.push(monoid_algebra_map_between(&phi, alg(&m), p1.source().clone()));
        }
    }
    let probe = probe_equalizer(&eq, &p1, &p2, &candidates).unwrap();
    assert!(probe.equalizing > 1);
    assert!(probe.holds());

    let other = BialgMorphism::identity(alg(&m2()));
    assert!(matches!(equalizer_coc(&p1, &other), Err(CatError::NotParallel)));
}

fn projection(m: &FiniteMonoid) -> MonoidHom {
    let a = Arc::new(m.clone());
    MonoidHom::first_projection(Arc::new(m.product(m)), a.clone(), &a).unwrap()
}

#[test]
fn kernel_examples() {
    let b = alg(&c2());
    let k = categorical_kernel(&BialgMorphism::identity(b)).unwrap();
    assert_eq!(k.sub.space, Subspace::coordinate(Q, 2, [0]));

    let k = categorical_kernel(&monoid_algebra_map(&projection(&c2()), Q)).unwrap();
    assert_eq!(k.sub.space, Subspace::coordinate(Q, 4, [0, 1]));
    assert_eq!(k.object.labels(), ["(1,1)", "(1,g)"]);

    let f = monoid_algebra_map(&projection(&m2()), Q);
    let k = categorical_kernel(&f).unwrap();
    assert_eq!(k.sub.space, Subspace::coordinate(Q, 4, [0, 1]));
    let naive = Subspace::span(
        Q,
        4,
        &f.matrix().sub(BialgMorphism::zero(f.source().clone(), f.target().clone()).matrix()).unwrap().nullspace(),
    )
    .unwrap();
    assert_eq!(naive.dim(), 3);
}

fn catalog_monoids() -> Vec<Arc<FiniteMonoid>> {
    vec![
        FiniteMonoid::trivial(),
        c2(),
        FiniteMonoid::cyclic(3),
        c2().product(&c2()),
        FiniteMonoid::symmetric3(),
        m2(),
        FiniteMonoid::flip_flop(),
    ]
    .into_iter()
    .map(Arc::new)
    .collect()
}

fn catalog_homs() -> Vec<MonoidHom> {
    let ms = catalog_monoids();
    let mut out = Vec::new();
    for x in &ms {
        for y in &ms {
            out.extend(enumerate_homs(x, y, ENUMERATION_GUARD).unwrap());
        }
    }
    out
}

#[test]
fn kernels_commute_with_grouplikes() {
    for f in catalog_homs() {
        let k = categorical_kernel(&monoid_algebra_map(&f, Q)).unwrap();
        let (km, _) = kernel_mon(&f).unwrap();
        let gl = grouplikes(&k.object).unwrap();
        assert!(gl.monoid().matches_by_labels(&km), "{f:?}");
    }
}

#[test]
fn pullback_examples() {
    let c22 = c2().product(&c2());
    let pi = monoid_algebra_map(&projection(&c2()), Q);
    let y = pi.target().clone();
    let pb = pullback_coc(&BialgMorphism::identity(y.clone()), &pi).unwrap();
    assert!(pb.proj_right.is_bijective());

    let pb = pullback_coc(&BialgMorphism::unit_of(y.clone()), &pi).unwrap();
    assert_eq!(pb.object().dim(), categorical_kernel(&pi).unwrap().dim());

    let pb = pullback_coc(&pi, &pi).unwrap();
    assert_eq!(pb.object().dim(), 8);
    let mon = pullback_mon(&projection(&c2()), &projection(&c2())).unwrap();
    let direct = monoid_algebra(&mon.monoid, Q);
    let mut relabelled = pb.object().raw().clone();
    relabelled.labels = direct.labels().to_vec();
    assert_eq!(&relabelled, direct.raw());
    assert_eq!(c22.order(), 4);
    assert!(matches!(pullback_coc(&pi, &BialgMorphism::identity(alg(&m2()))), Err(CatError::CodomainMismatch)));
}

#[test]
fn generated_subbialgebra_examples() {
    let over_c2 = diagonal_point(&alg(&c2())).unwrap();
    let v = over_c2.kernel().image().sum(&over_c2.section().image()).unwrap();
    assert_eq!(v.dim(), 3);
    assert_eq!(generated_subbialgebra(over_c2.middle(), &v).unwrap().dim(), 4);

    let over_m2 = diagonal_point(&alg(&m2())).unwrap();
    let v = over_m2.kernel().image().sum(&over_m2.section().image()).unwrap();
    let closure = generated_subbialgebra(over_m2.middle(), &v).unwrap();
    assert_eq!(closure.space, Subspace::coordinate(Q, 4, [0, 1, 3]));

    let x = alg(&c2());
    assert!(generated_subbialgebra(&x, &Subspace::full(Q, 2)).unwrap().space.is_full());
    let bad = Subspace::span(Q, 2, &[vec![Q.one(), Q.one()]]).unwrap();
    assert!(matches!(generated_subbialgebra(&x, &bad), Err(CatError::NotSubcoalgebra(_))));
}

#[test]
fn strongness_examples() {
    let r = is_strong_split_extension(&diagonal_point(&alg(&c2())).unwrap()).unwrap();
    assert!(r.strong);
    assert_eq!(r.closure_dim, 4);

    let r = is_strong_split_extension(&diagonal_point(&alg(&m2())).unwrap()).unwrap();
    assert!(!r.strong);
    assert_eq!(r.closure_dim, 3);
    assert_eq!(r.witness.unwrap().0, "e⊗1");

    let r = is_strong_split_extension(&product_point(&alg(&c2()), &alg(&FiniteMonoid::cyclic(3))).unwrap()).unwrap();
    assert!(r.strong);

    let ff = diagonal_point(&alg(&FiniteMonoid::flip_flop())).unwrap();
    let r = is_strong_split_extension(&ff).unwrap();
    assert!(!r.strong);
    assert!(r.closure_dim < 9);
}

#[test]
fn split_extension_validation() {
    let y = alg(&c2());
    let tp = tensor_bialgebra(&y, &y).unwrap();
    assert!(matches!(
        BialgSplitExtension::from_point(tp.pi_left.clone(), tp.iota_right.clone()),
        Err(CatError::NotSplit)
    ));
    let ext = diagonal_point(&y).unwrap();
    // the section is not a kernel of the projection
    assert!(matches!(
        BialgSplitExtension::new(tp.iota_left.clone(), ext.projection().clone(), ext.section().clone()),
        Err(CatError::NotAKernel)
    ));
}

#[test]
fn kernel_meets_section_in_the_unit() {
    for m in catalog_monoids() {
        let y = alg(&m);
        for ext in [diagonal_point(&y).unwrap(), product_point(&alg(&c2()), &y).unwrap()] {
            let meet = ext.kernel_section_meet().unwrap();
            assert_eq!(meet, Subspace::span(Q, ext.middle().dim(), &[ext.middle().unit().to_vec()]).unwrap());
        }
    }
}

#[test]
fn stable_family_over_groups_and_monoids() {
    let named: Vec<(String, Arc<FiniteMonoid>)> =
        catalog_monoids().into_iter().map(|m| (m.labels().join(""), m)).collect();
    for m in [c2(), FiniteMonoid::cyclic(3)] {
        let y = alg(&m);
        let family: Vec<BialgMorphism> =
            default_stable_family(&y, &named).unwrap().into_iter().map(|(_, h)| h).collect();
        assert!(family.len() > 2);
        let ext = diagonal_point(&y).unwrap();
        assert!(is_stably_strong(&ext, &family).unwrap().iter().all(|r| r.strong));
    }
    let y = alg(&m2());
    let ext = diagonal_point(&y).unwrap();
    let r = is_stably_strong(&ext, &[BialgMorphism::identity(y)]).unwrap();
    assert!(!r[0].strong);
}

#[test]
fn grouplikes_of_strong_points_generate() {
    for m in catalog_monoids() {
        let y = alg(&m);
        let ext = diagonal_point(&y).unwrap();
        if !is_strong_split_extension(&ext).unwrap().strong {
            continue;
        }
        let gx = grouplikes(ext.middle()).unwrap();
        let gk = grouplikes(ext.kernel().source()).unwrap();
        let gy = grouplikes(ext.base()).unwrap();
        let mut seeds = Vec::new();
        for (h, g) in [(ext.kernel(), &gk), (ext.section(), &gy)] {
            for x in g.elements() {
                seeds.push(gx.index_of(&h.apply(x)).unwrap());
            }
        }
        assert_eq!(gx.monoid().generated_submonoid(seeds).len(), gx.len());
    }
}

#[test]
fn strong_points_are_cokernels_of_their_kernels() {
    for m in [c2(), FiniteMonoid::trivial()] {
        let xm = Arc::new(m.product(&m));
        let ext = diagonal_point(&alg(&m)).unwrap();
        assert!(is_strong_split_extension(&ext).unwrap().strong);
        let mut seen: Vec<(BialgMorphism, BialgMorphism)> = Vec::new();
        for z in catalog_monoids() {
            for phi in enumerate_homs(&xm, &z, ENUMERATION_GUARD).unwrap() {
                let h = monoid_algebra_map_between(&phi, ext.middle().clone(), alg(&z));
                if !h.compose(ext.kernel()).unwrap().is_zero_morphism() {
                    continue;
                }
                let restricted = h.compose(ext.section()).unwrap();
                for (other, r) in &seen {
                    if other.target() == h.target() && r == &restricted {
                        assert_eq!(other, &h);
                    }
                }
                seen.push((h, restricted));
            }
        }
        assert!(seen.len() > 1);
    }
}
