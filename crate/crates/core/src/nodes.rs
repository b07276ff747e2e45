//! Node sets in the plane and the rank decisions made on their collocation
//! matrices: independence, poisedness, the Hilbert function, vanishing
//! spaces and fundamental polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Matrix, RowEchelon, Scalar};
use crate::json::ScalarRepr;
use crate::poly::{dim_pi, monomials_at, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Node<T> {
    pub fn new(x: T, y: T) -> Self {
        Node { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Node { x: scalar_from_int(x), y: scalar_from_int(y) }
    }

    pub fn eval(&self, p: &Poly<T>) -> T {
        p.eval(&self.x, &self.y)
    }

    pub fn lies_on(&self, p: &Poly<T>) -> bool {
        self.eval(p).is_zero()
    }
}

pub(crate) fn scalar_from_int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type represents small integers")
}

impl<T: fmt::Display> fmt::Display for Node<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<T: Scalar> Serialize for Node<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [ScalarRepr::from_scalar(&self.x), ScalarRepr::from_scalar(&self.y)].serialize(s)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for Node<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[ScalarRepr; 2]>::deserialize(d)?;
        let x = x.parse().map_err(serde::de::Error::custom)?;
        let y = y.parse().map_err(serde::de::Error::custom)?;
        Ok(Node { x, y })
    }
}

/// An ordered list of pairwise distinct nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet<T> {
    nodes: Vec<Node<T>>,
}

impl<T: Scalar> NodeSet<T> {
    pub fn new(nodes: Vec<Node<T>>) -> Result<Self> {
        for (i, a) in nodes.iter().enumerate() {
            if nodes[..i].contains(a) {
                return Err(Error::DuplicateNode(i));
            }
        }
        Ok(NodeSet { nodes })
    }

    pub fn empty() -> Self {
        NodeSet { nodes: Vec::new() }
    }

    pub fn from_ints(points: &[(i64, i64)]) -> Result<Self> {
        Self::new(points.iter().map(|&(x, y)| Node::from_ints(x, y)).collect())
    }

    pub fn nodes(&self) -> &[Node<T>] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, a: &Node<T>) -> bool {
        self.nodes.contains(a)
    }

    pub fn position(&self, a: &Node<T>) -> Option<usize> {
        self.nodes.iter().position(|b| b == a)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Node<T>> {
        self.nodes.iter()
    }

    /// Appends `a`; fails if it is already present.
    pub fn push(&mut self, a: Node<T>) -> Result<()> {
        if self.contains(&a) {
            return Err(Error::DuplicateNode(self.nodes.len()));
        }
        self.nodes.push(a);
        Ok(())
    }

    pub fn with(&self, a: Node<T>) -> Result<Self> {
        let mut out = self.clone();
        out.push(a)?;
        Ok(out)
    }

    pub fn without(&self, index: usize) -> Self {
        let mut nodes = self.nodes.clone();
        nodes.remove(index);
        NodeSet { nodes }
    }

    /// Nodes at which `p` vanishes.
    pub fn on_curve(&self, p: &Poly<T>) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.nodes[i].lies_on(p)).collect()
    }
}

impl<'a, T> IntoIterator for &'a NodeSet<T> {
    type Item = &'a Node<T>;
    type IntoIter = std::slice::Iter<'a, Node<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.nodes.iter()
    }
}

impl<T: Scalar> Serialize for NodeSet<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.nodes.serialize(s)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for NodeSet<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let nodes = Vec::<Node<T>>::deserialize(d)?;
        NodeSet::new(nodes).map_err(serde::de::Error::custom)
    }
}

/// Basis of the polynomials of degree at most `n` vanishing on a node set.
#[derive(Clone, Debug, PartialEq)]
pub struct VanishingSpace<T> {
    pub n: usize,
    pub basis: Vec<Poly<T>>,
}

impl<T: Scalar> VanishingSpace<T> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn coefficient_matrix(&self) -> Matrix<T> {
        Matrix::from_rows(dim_pi(self.n), self.basis.iter().map(|p| p.coeffs().to_vec()))
    }

    /// Whether `p` (degree at most `n`) lies in the span of the basis.
    pub fn contains(&self, p: &Poly<T>) -> bool {
        let Ok(p) = p.with_bound(self.n) else {
            return false;
        };
        let m = self.coefficient_matrix();
        let stacked = m.vstack(&Matrix::from_rows(dim_pi(self.n), [p.coeffs().to_vec()]));
        stacked.rank() == m.rank()
    }

    /// Whether both spaces are the same subspace of Π_n.
    pub fn same_span(&self, other: &VanishingSpace<T>) -> bool {
        if self.n != other.n {
            return false;
        }
        let a = self.coefficient_matrix();
        let b = other.coefficient_matrix();
        let ra = a.rank();
        ra == b.rank() && ra == a.vstack(&b).rank()
    }
}

/// The `#xs × dim_pi(n)` matrix whose rows are the monomials evaluated at
/// each node.
pub fn collocation_matrix<T: Scalar>(xs: &NodeSet<T>, n: usize) -> Matrix<T> {
    Matrix::from_rows(dim_pi(n), xs.iter().map(|a| monomials_at(&a.x, &a.y, n)))
}

pub fn is_n_independent<T: Scalar>(xs: &NodeSet<T>, n: usize) -> bool {
    xs.len() <= dim_pi(n) && hilbert_function(xs, n) == xs.len()
}

pub fn is_n_poised<T: Scalar>(xs: &NodeSet<T>, n: usize) -> bool {
    xs.len() == dim_pi(n) && is_n_independent(xs, n)
}

/// Rank of the collocation matrix, the size of every maximal
/// `n`-independent subset.
pub fn hilbert_function<T: Scalar>(xs: &NodeSet<T>, n: usize) -> usize {
    collocation_matrix(xs, n).rank()
}

/// Greedy scan in input order keeping every node that raises the
/// collocation rank.
pub fn maximal_independent_subset<T: Scalar>(xs: &NodeSet<T>, n: usize) -> NodeSet<T> {
    let mut echelon = RowEchelon::new(dim_pi(n));
    let nodes = xs
        .iter()
        .filter(|a| echelon.insert(&monomials_at(&a.x, &a.y, n)))
        .cloned()
        .collect();
    NodeSet { nodes }
}

pub fn vanishing_basis<T: Scalar>(xs: &NodeSet<T>, n: usize) -> VanishingSpace<T> {
    let basis = collocation_matrix(xs, n)
        .nullspace()
        .columns()
        .into_iter()
        .map(|c| Poly::new(n, c))
        .collect();
    VanishingSpace { n, basis }
}

/// Canonical fundamental polynomial of `a`: value 1 at `a`, 0 on the rest
/// of `xs`, free coefficients zero. `None` when `a` has none.
pub fn fundamental_polynomial<T: Scalar>(
    a: &Node<T>,
    xs: &NodeSet<T>,
    n: usize,
) -> Result<Option<Poly<T>>> {
    let k = xs.position(a).ok_or(Error::NodeNotInSet)?;
    let mut rhs = vec![T::zero(); xs.len()];
    rhs[k] = T::one();
    Ok(collocation_matrix(xs, n).solve(&rhs).map(|c| Poly::new(n, c)))
}

/// The first [`IntegerSpiral`] point that keeps `xs` independent, or `None`
/// once `xs` is `n`-poised. A candidate is taken when some polynomial
/// vanishing on `xs` is nonzero there.
pub fn next_spiral_node<T: Scalar>(xs: &NodeSet<T>, n: usize) -> Option<Node<T>> {
    let space = vanishing_basis(xs, n);
    if space.basis.is_empty() {
        return None;
    }
    let found = IntegerSpiral::new()
        .map(|(x, y)| Node::from_ints(x, y))
        .find(|a| !xs.contains(a) && space.basis.iter().any(|q| !a.lies_on(q)));
    Some(found.expect("the spiral is infinite and a nonzero polynomial cannot vanish on all of Z^2"))
}

/// Adds [`next_spiral_node`] points until the set is `n`-poised.
pub fn extend_to_poised<T: Scalar>(xs: &NodeSet<T>, n: usize) -> Result<NodeSet<T>> {
    if !is_n_independent(xs, n) {
        return Err(Error::NotIndependent(n));
    }
    let mut out = xs.clone();
    while let Some(a) = next_spiral_node(&out, n) {
        out.push(a)?;
    }
    Ok(out)
}

/// Integer points ordered by Chebyshev ring, then by L1 norm, then by angle
/// counter-clockwise from the positive x axis: (0,0), (1,0), (0,1),
/// (-1,0), (0,-1), (1,1), (-1,1), ...
#[derive(Clone, Debug, Default)]
pub struct IntegerSpiral {
    ring: i64,
    pending: std::vec::IntoIter<(i64, i64)>,
}

impl IntegerSpiral {
    pub fn new() -> Self {
        IntegerSpiral { ring: -1, pending: Vec::new().into_iter() }
    }

    fn ring_points(r: i64) -> Vec<(i64, i64)> {
        if r == 0 {
            return vec![(0, 0)];
        }
        let mut pts: Vec<(i64, i64)> = (-r..=r)
            .flat_map(|x| (-r..=r).map(move |y| (x, y)))
            .filter(|&(x, y)| x.abs().max(y.abs()) == r)
            .collect();
        pts.sort_by(|&a, &b| {
            (a.0.abs() + a.1.abs())
                .cmp(&(b.0.abs() + b.1.abs()))
                .then_with(|| angle_cmp(a, b))
        });
        pts
    }
}

fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

impl Iterator for IntegerSpiral {
    type Item = (i64, i64);

    fn next(&mut self) -> Option<(i64, i64)> {
        loop {
            if let Some(p) = self.pending.next() {
                return Some(p);
            }
            self.ring += 1;
            self.pending = Self::ring_points(self.ring).into_iter();
        }
    }
}

/// Integers 0, 1, -1, 2, -2, ...
pub fn integer_zigzag(index: usize) -> i64 {
    let k = index.div_ceil(2) as i64;
    if index % 2 == 1 {
        k
    } else {
        -k
    }
}
