mod common;

use proptest::prelude::*;

use common::{clustered_node_set, hilbert, node, node_set, qi};
use poised::nodes::{
    extend_to_poised, fundamental_polynomial, hilbert_function, integer_zigzag, is_n_independent, is_n_poised,
    maximal_independent_subset, next_spiral_node, vanishing_basis, IntegerSpiral, NodeSet,
};
use poised::poly::dim_pi;
use poised::{Error, QMatrix, QNodeSet, Rational};

fn basis_rank(xs: &QNodeSet, n: usize) -> usize {
    let space = vanishing_basis(xs, n);
    common::bareiss_rank(&QMatrix::from_rows(dim_pi(n), space.basis.iter().map(|p| p.coeffs().to_vec())))
}

#[test]
fn spiral_prefix() {
    let first: Vec<(i64, i64)> = IntegerSpiral::new().take(10).collect();
    assert_eq!(
        first,
        [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (-1, -1), (1, -1), (2, 0)]
    );
    let zz: Vec<i64> = (0..5).map(integer_zigzag).collect();
    assert_eq!(zz, [0, 1, -1, 2, -2]);
}

#[test]
fn collinear_hilbert_and_subset() {
    let xs = QNodeSet::from_ints(&[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
    assert_eq!(hilbert_function(&xs, 2), 3);
    assert_eq!(maximal_independent_subset(&xs, 2).nodes(), &xs.nodes()[..3]);
    assert_eq!(hilbert_function(&NodeSet::<Rational>::empty(), 4), 0);
}

#[test]
fn duplicates_are_rejected() {
    let err = QNodeSet::from_ints(&[(0, 0), (1, 2), (0, 0)]).unwrap_err();
    assert!(matches!(err, Error::DuplicateNode(2)));
}

#[test]
fn dependent_input_cannot_be_extended() {
    let xs = QNodeSet::from_ints(&[(0, 0), (1, 0), (2, 0)]).unwrap();
    assert!(matches!(extend_to_poised(&xs, 1), Err(Error::NotIndependent(1))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn hilbert_matches_oracle(xs in clustered_node_set(5), n in 0usize..5) {
        prop_assert_eq!(hilbert_function(&xs, n), hilbert(&xs, n));
    }

    #[test]
    fn dimension_identity(xs in clustered_node_set(5), n in 0usize..5) {
        let space = vanishing_basis(&xs, n);
        let h = hilbert(&xs, n);
        prop_assert_eq!(space.dimension(), dim_pi(n) - h);
        prop_assert_eq!(basis_rank(&xs, n), space.dimension());
        prop_assert_eq!(is_n_independent(&xs, n), h == xs.len());
        prop_assert_eq!(is_n_independent(&xs, n), space.dimension() + xs.len() == dim_pi(n));
        for p in &space.basis {
            prop_assert!(xs.iter().all(|a| a.lies_on(p)));
        }
    }

    #[test]
    fn hilbert_grows_by_at_most_one(xs in node_set(8), a in node(), n in 0usize..4) {
        prop_assume!(!xs.contains(&a));
        let before = hilbert_function(&xs, n);
        let after = hilbert_function(&xs.with(a).unwrap(), n);
        prop_assert!(after == before || after == before + 1);
        prop_assert!(hilbert_function(&xs, n) <= hilbert_function(&xs, n + 1));
    }

    #[test]
    fn fundamental_polynomials_are_deltas(xs in clustered_node_set(4), n in 1usize..4) {
        let mut all_present = true;
        for (i, a) in xs.iter().enumerate() {
            match fundamental_polynomial(a, &xs, n).unwrap() {
                Some(p) => {
                    for (j, b) in xs.iter().enumerate() {
                        let expected = if i == j { qi(1) } else { qi(0) };
                        prop_assert_eq!(b.eval(&p), expected);
                    }
                }
                None => all_present = false,
            }
        }
        prop_assert_eq!(all_present, is_n_independent(&xs, n));
    }

    #[test]
    fn maximal_subset_keeps_the_vanishing_space(xs in clustered_node_set(5), n in 0usize..4) {
        let ys = maximal_independent_subset(&xs, n);
        prop_assert_eq!(ys.len(), hilbert(&xs, n));
        prop_assert!(is_n_independent(&ys, n));
        prop_assert!(vanishing_basis(&ys, n).same_span(&vanishing_basis(&xs, n)));
    }

    #[test]
    fn one_short_of_poised_leaves_one_curve(xs in node_set(12), n in 1usize..4) {
        let ys = maximal_independent_subset(&xs, n);
        let full = extend_to_poised(&ys, n).unwrap();
        prop_assert!(is_n_poised(&full, n));
        prop_assert_eq!(&full.nodes()[..ys.len()], ys.nodes());
        let short = full.without(full.len() - 1);
        prop_assert_eq!(vanishing_basis(&short, n).dimension(), 1);
        prop_assert!(next_spiral_node(&full, n).is_none());
    }

    #[test]
    fn json_round_trip(xs in node_set(6)) {
        let text = serde_json::to_string(&xs).unwrap();
        let back: QNodeSet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, xs);
    }
}
