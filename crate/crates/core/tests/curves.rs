mod common;

use proptest::prelude::*;

use common::{count_monomials_between, hilbert, qi, small_rational, vanishes_on_line};
use poised::construct::{random_line, rng};
use poised::curves::{
    d_star, extend_on_curve, is_maximal_curve, node_uses, uniqueness_threshold, Curve, CurveSampler, LineForm,
};
use poised::nodes::{vanishing_basis, NodeSet};
use poised::{Error, QLineForm, QNodeSet};

fn line(a: i64, b: i64, c: i64) -> QLineForm {
    LineForm::new(qi(a), qi(b), qi(c)).unwrap()
}

#[test]
fn counting_formulas_match_monomial_counts() {
    for n in 1..=12 {
        for k in 1..=n {
            assert_eq!(d_star(n, k).unwrap(), count_monomials_between(Some(n - k), n));
            let expected = if k == 1 { 2 } else { count_monomials_between(Some(n - k + 1), n) + 2 };
            assert_eq!(uniqueness_threshold(n, k).unwrap(), expected);
        }
    }
    assert!(d_star(3, 0).is_err());
    assert!(uniqueness_threshold(3, 4).is_err());
}

#[test]
fn axes_conic_for_cubics() {
    let axes = CurveSampler::line_union(vec![line(1, 0, 0), line(0, 1, 0)]).unwrap();
    let xy = axes.curve().unwrap().unwrap();
    let start = QNodeSet::from_ints(&[(1, 0), (2, 0), (0, 1), (0, 2)]).unwrap();
    let xs = extend_on_curve(&start, &axes, &xy, 3).unwrap();
    assert_eq!(xs.len(), 7);
    assert_eq!(hilbert(&xs, 3), 7);
    assert!(is_maximal_curve(&xy, &xs, 3).unwrap());
}

#[test]
fn line_unions_must_be_reduced() {
    let err = CurveSampler::line_union(vec![line(1, 1, 0), line(2, 2, 0)]).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
    assert!(LineForm::new(qi(0), qi(0), qi(1)).is_err());
}

#[test]
fn off_curve_start_is_rejected() {
    let x_axis = CurveSampler::Line(line(0, 1, 0));
    let curve = x_axis.curve().unwrap().unwrap();
    let start = QNodeSet::from_ints(&[(0, 1)]).unwrap();
    assert!(extend_on_curve(&start, &x_axis, &curve, 2).is_err());
}

#[test]
fn uses_relation_on_a_poised_set() {
    // Three nodes on y = 0 and a node off it; y divides the fundamental
    // polynomial of (0, 1) only.
    let xs = QNodeSet::from_ints(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]).unwrap();
    let y = Curve::from_lines(&[line(0, 1, 0)]).unwrap();
    let users: Vec<bool> = xs.iter().map(|a| node_uses(a, &xs, 2, &y).unwrap()).collect();
    assert_eq!(users, [false, false, false, true, true, true]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn maximal_line_law(seed in 0u64..1000, n in 1usize..5, shift in small_rational()) {
        let l = random_line(&mut rng(seed), &[]).unwrap();
        let pts: Vec<_> = (0..=n as i64 + 1).map(|t| l.point_at(&(qi(t) + &shift))).collect();
        let on = NodeSet::new(pts[..=n].to_vec()).unwrap();
        let over = NodeSet::new(pts).unwrap();
        prop_assert_eq!(hilbert(&on, n), n + 1);
        prop_assert_eq!(hilbert(&over, n), n + 1);
        for p in &vanishing_basis(&on, n).basis {
            prop_assert!(vanishes_on_line(p, &l, n));
        }
    }

    #[test]
    fn extension_reaches_d_star(seed in 0u64..1000, n in 1usize..5, k in 1usize..4) {
        prop_assume!(k <= n);
        let mut r = rng(seed);
        let mut lines = Vec::new();
        for _ in 0..k {
            let l = random_line(&mut r, &lines).unwrap();
            lines.push(l);
        }
        let sampler = CurveSampler::line_union(lines.clone()).unwrap();
        let q = sampler.curve().unwrap().unwrap();
        let xs = extend_on_curve(&NodeSet::empty(), &sampler, &q, n).unwrap();
        prop_assert_eq!(xs.len(), count_monomials_between(Some(n - k), n));
        prop_assert_eq!(hilbert(&xs, n), xs.len());
        prop_assert!(xs.iter().all(|a| lines.iter().any(|l| l.contains(a))));
    }
}
