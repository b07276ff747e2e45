//! Reference computations for the integration tests. Nothing here goes
//! through the library's row reduction.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use poised::nodes::{Node, NodeSet};
use poised::poly::Poly;
use poised::{QLineForm, QMatrix, QNode, QNodeSet, QPoly, Rational};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
pub fn bareiss_rank(m: &QMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Collocation matrix built straight from the powers, in the library's
/// monomial order (by total degree, then by falling power of x).
pub fn collocation(xs: &QNodeSet, n: usize) -> QMatrix {
    let mut data = Vec::new();
    for a in xs {
        for t in 0..=n {
            for i in (0..=t).rev() {
                data.push(pow(&a.x, i) * pow(&a.y, t - i));
            }
        }
    }
    QMatrix::from_vec(xs.len(), (n + 1) * (n + 2) / 2, data)
}

pub fn pow(v: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * v)
}

pub fn hilbert(xs: &QNodeSet, n: usize) -> usize {
    bareiss_rank(&collocation(xs, n))
}

/// Monomials x^i y^j with `lo < i + j <= hi`, by enumeration.
pub fn count_monomials_between(lo: Option<usize>, hi: usize) -> usize {
    let mut count = 0;
    for i in 0..=hi {
        for j in 0..=hi - i {
            if lo.is_none_or(|lo| i + j > lo) {
                count += 1;
            }
        }
    }
    count
}

/// Whether `p` vanishes identically on the line: its restriction to a
/// parametrized line has degree at most `deg`, so `deg + 1` parameter
/// values decide.
pub fn vanishes_on_line(p: &QPoly, line: &QLineForm, deg: usize) -> bool {
    (0..=deg as i64).all(|t| line.point_at(&qi(t)).eval(p).is_zero())
}

pub fn det3(a: &QNode, b: &QNode, c: &QNode) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

pub fn poly_from_ints(n: usize, coeffs: &[i64]) -> QPoly {
    Poly::new(n, coeffs.iter().map(|&c| qi(c)).collect())
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn node() -> impl Strategy<Value = QNode> {
    (small_rational(), small_rational()).prop_map(|(x, y)| Node::new(x, y))
}

/// Distinct nodes, up to `max` of them.
pub fn node_set(max: usize) -> impl Strategy<Value = QNodeSet> {
    prop::collection::vec(node(), 0..=max).prop_map(|v| {
        let mut xs = NodeSet::empty();
        for a in v {
            if !xs.contains(&a) {
                xs.push(a).unwrap();
            }
        }
        xs
    })
}

pub fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        // Small entries with many zeros, so rank deficiency is common.
        prop::collection::vec(prop_oneof![3 => Just(qi(0)), 5 => small_rational()], r * c)
            .prop_map(move |data| QMatrix::from_vec(r, c, data))
    })
}

pub fn poly(n: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rational(), (n + 1) * (n + 2) / 2).prop_map(move |c| Poly::new(n, c))
}

/// Random points mixed with points on a common line and on the hyperbola
/// `xy = 1`, so dependent configurations are frequent.
pub fn clustered_node_set(max_each: usize) -> impl Strategy<Value = QNodeSet> {
    let line_pts = (small_rational(), small_rational(), prop::collection::vec(small_rational(), 0..=max_each))
        .prop_map(|(slope, icept, ts)| {
            ts.into_iter()
                .map(|t| Node::new(t.clone(), &slope * &t + &icept))
                .collect::<Vec<_>>()
        });
    let conic_pts = prop::collection::vec(small_rational(), 0..=max_each).prop_map(|ts| {
        ts.into_iter()
            .filter(|t| !t.is_zero())
            .map(|t| Node::new(t.clone(), t.recip()))
            .collect::<Vec<_>>()
    });
    let free = prop::collection::vec(node(), 0..=max_each);
    (line_pts, conic_pts, free).prop_map(|(a, b, c)| {
        let mut xs = NodeSet::empty();
        for p in a.into_iter().chain(b).chain(c) {
            if !xs.contains(&p) {
                xs.push(p).unwrap();
            }
        }
        xs
    })
}
