use proptest::prelude::*;

use super::{Field, Matrix, Scalar, Subspace};

fn small_matrix(field: Field) -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-3i64..4, r * c)
            .prop_map(move |vals| Matrix::from_fn(field, r, c, |i, j| field.from_i64(vals[i * c + j])))
    })
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(5))]
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in field_strategy().prop_flat_map(small_matrix)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(pivots, pivots2);
        prop_assert_eq!(Subspace::from_matrix_rows(&m), Subspace::from_matrix_rows(&r));
    }

    #[test]
    fn solve_agrees_with_augmented_rank(
        (m, b) in field_strategy().prop_flat_map(small_matrix).prop_flat_map(|m| {
            let rows = m.rows();
            let field = m.field();
            (Just(m), proptest::collection::vec(-3i64..4, rows)
                .prop_map(move |v| v.into_iter().map(|x| field.from_i64(x)).collect::<Vec<Scalar>>()))
        })
    ) {
        // consistent exactly when appending b as a column keeps the rank
        let aug = Matrix::from_fn(m.field(), m.rows(), m.cols() + 1, |r, c| {
            if c < m.cols() { m.get(r, c).clone() } else { b[r].clone() }
        });
        let consistent = aug.rank() == m.rank();
        match m.solve(&b).unwrap() {
            Some(x) => {
                prop_assert!(consistent);
                prop_assert_eq!(m.apply(&x).unwrap(), b);
            }
            None => prop_assert!(!consistent),
        }
    }

    #[test]
    fn modular_law_on_dimensions(
        field in field_strategy(),
        n in 1usize..6,
        u in proptest::collection::vec(proptest::collection::vec(-2i64..3, 6), 0..5),
        v in proptest::collection::vec(proptest::collection::vec(-2i64..3, 6), 0..5),
    ) {
        let mk = |rows: &Vec<Vec<i64>>| {
            let vecs: Vec<Vec<Scalar>> = rows.iter().map(|r| r[..n].iter().map(|&x| field.from_i64(x)).collect()).collect();
            Subspace::span(field, n, &vecs).unwrap()
        };
        let (su, sv) = (mk(&u), mk(&v));
        let sum = su.sum(&sv).unwrap();
        let meet = su.intersect(&sv).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), su.dim() + sv.dim());
        prop_assert!(meet.is_subspace_of(&su) && meet.is_subspace_of(&sv));
        prop_assert!(su.is_subspace_of(&sum) && sv.is_subspace_of(&sum));
    }
}
