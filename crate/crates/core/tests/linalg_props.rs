use phm_core::linalg::{
    frac, intersect, kernel, permute_factors, quotient, Matrix, Scalar, Solver, Subspace,
};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone()))
}

fn sized(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Unit upper triangular, hence invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_map(move |m| {
        Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Less => m[(r, c)].clone(),
            std::cmp::Ordering::Equal => Scalar::from_integer(1.into()),
            std::cmp::Ordering::Greater => Scalar::from_integer(0.into()),
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_mixed_product(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 3)) {
        let lhs = a.kron(&b).compose(&c.kron(&d));
        prop_assert_eq!(lhs, a.compose(&c).kron(&b.compose(&d)));
    }

    #[test]
    fn swapping_factors_conjugates_kron(a in sized(3), b in sized(3)) {
        let lhs = a.kron(&b).permute_rows(&permute_factors(&[a.rows(), b.rows()], &[1, 0]));
        let rhs = b.kron(&a).permute_cols(&permute_factors(&[a.cols(), b.cols()], &[1, 0]));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_is_annihilated(m in sized(5)) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim(), m.cols() - m.rank());
        prop_assert!(m.compose(&k.basis_matrix()).is_zero());
    }

    #[test]
    fn span_is_canonical(m in sized(5), t in invertible(5)) {
        let t = t.block(0, 0, m.cols(), m.cols());
        let a = Subspace::column_space(&m);
        let b = Subspace::column_space(&m.compose(&t));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn intersection_dimension(a in matrix(5, 3), b in matrix(5, 3)) {
        let (u, v) = (Subspace::column_space(&a), Subspace::column_space(&b));
        let w = intersect(&u, &v).unwrap();
        let sum = Subspace::column_space(&Matrix::hstack(5, &[&a, &b]));
        prop_assert_eq!(w.dim() + sum.dim(), u.dim() + v.dim());
        prop_assert!(w.is_subspace_of(&u) && w.is_subspace_of(&v));
    }

    #[test]
    fn quotient_splits(rel in matrix(5, 2)) {
        let r = Subspace::column_space(&rel);
        let q = quotient(5, &r).unwrap();
        prop_assert_eq!(q.dim, 5 - r.dim());
        prop_assert_eq!(q.projector.compose(&q.section), Matrix::identity(q.dim));
        prop_assert!(q.projector.compose(&r.basis_matrix()).is_zero());
    }

    #[test]
    fn membership_matrix_detects_members(m in matrix(4, 2), v in matrix(4, 1)) {
        let s = Subspace::column_space(&m);
        let q = s.membership_matrix();
        prop_assert!(q.compose(&m).is_zero());
        prop_assert_eq!(q.compose(&v).is_zero(), s.contains(&v.column(0)));
    }

    #[test]
    fn inverse_of_invertible(t in invertible(4)) {
        let inv = t.inverse().unwrap();
        prop_assert_eq!(inv.compose(&t), Matrix::identity(4));
    }

    #[test]
    fn solver_finds_preimages(a in sized(4), x in matrix(4, 1)) {
        let x = x.block(0, 0, a.cols(), 1);
        let b = a.compose(&x);
        let y = Solver::new(&a).solve(&b.column(0)).unwrap();
        prop_assert_eq!(a.apply(&y), b.column(0));
    }
}
