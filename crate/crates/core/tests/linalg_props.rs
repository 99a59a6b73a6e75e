use proptest::prelude::*;

use probe_core::linalg::{
    emit_matrix_text, parse_matrix_text, projection_split, rat, solve, symmetric_same_rowspace, RationalMatrix,
};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| RationalMatrix::from_fn(rows, cols, |i, j| rat(v[i * cols + j])))
}

fn symmetric(n: usize) -> impl Strategy<Value = RationalMatrix> {
    matrix(n, n).prop_map(|m| &m + &m.transpose())
}

fn any_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn rank_of_transpose(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity(m in (1usize..6).prop_flat_map(|n| matrix(n, n))) {
        prop_assert_eq!(m.rank() + m.nullity().unwrap(), m.rows());
    }

    #[test]
    fn determinant_detects_full_rank(m in (1usize..5).prop_flat_map(|n| matrix(n, n))) {
        let singular = m.determinant().unwrap() == rat(0);
        prop_assert_eq!(singular, m.rank() < m.rows());
    }

    #[test]
    fn row_space_basis_keeps_rank(m in any_matrix()) {
        let basis = m.row_space_basis();
        prop_assert_eq!(basis.rows(), m.rank());
        prop_assert_eq!(m.vstack(&basis).unwrap().rank(), m.rank());
    }

    #[test]
    fn projection_split_is_orthogonal(
        (a, b) in (1usize..5, 1usize..4).prop_flat_map(|(k, m)| (symmetric(k), matrix(k, m)))
    ) {
        let (par, perp) = projection_split(&a, &b).unwrap();
        prop_assert_eq!(&par + &perp, b.clone());
        prop_assert!(solve(&a, &par).unwrap().is_some());
        prop_assert!((&a.transpose() * &perp).is_zero());
        // column spaces: [A | B] = [A | B⊥] up to column operations
        prop_assert_eq!(a.hstack(&b).unwrap().rank(), a.rank() + perp.rank());
    }

    #[test]
    fn symmetric_same_rowspace_shares_rows(b in any_matrix()) {
        let s = symmetric_same_rowspace(&b);
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.rank(), b.rank());
        prop_assert_eq!(b.vstack(&s).unwrap().rank(), b.rank());
    }

    #[test]
    fn text_roundtrip(m in any_matrix()) {
        let half = m.scale(&(rat(1) / rat(2)));
        prop_assert_eq!(parse_matrix_text(&emit_matrix_text(&half)).unwrap(), half);
    }
}
