//! Curves relative to independent node sets: the maximal node count
//! `d(n, k)`, maximality, the "uses" relation and extension of an
//! independent set along a curve.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, RowEchelon, Scalar};
use crate::json::ScalarRepr;
use crate::nodes::{fundamental_polynomial, integer_zigzag, is_n_independent, scalar_from_int, Node, NodeSet};
use crate::poly::{dim_pi, monomials_at, Poly};

/// Candidates [`extend_on_curve`] may draw before giving up.
pub const SAMPLER_BUDGET: usize = 10_000;

/// Largest number of `n`-independent nodes on a degree-`k` curve without
/// multiple components: `k(2n + 3 - k) / 2`.
pub fn d_star(n: usize, k: usize) -> Result<usize> {
    if k < 1 || k > n {
        return Err(Error::DegreeOutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(k * (2 * n + 3 - k) / 2)
}

/// Smallest number of `n`-independent nodes that pins down at most one
/// curve of degree `k`: `(k - 1)(2n + 4 - k) / 2 + 2`.
pub fn uniqueness_threshold(n: usize, k: usize) -> Result<usize> {
    if k < 1 || k > n {
        return Err(Error::DegreeOutOfRange(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok((k - 1) * (2 * n + 4 - k) / 2 + 2)
}

/// A nonconstant polynomial, identified with every nonzero multiple of it.
#[derive(Clone, Debug)]
pub struct Curve<T> {
    poly: Poly<T>,
    degree: usize,
}

impl<T: Scalar> Curve<T> {
    pub fn new(poly: Poly<T>) -> Result<Self> {
        match poly.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::DegreeOutOfRange("a curve needs degree at least 1".into())),
            Some(degree) => Ok(Curve { poly: poly.trimmed(), degree }),
        }
    }

    pub fn from_lines(lines: &[LineForm<T>]) -> Result<Self> {
        let poly = lines.iter().fold(Poly::constant(T::one()), |acc, l| acc.mul(&l.poly()));
        Self::new(poly)
    }

    pub fn poly(&self) -> &Poly<T> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn contains(&self, a: &Node<T>) -> bool {
        a.lies_on(&self.poly)
    }
}

impl<T: Scalar> PartialEq for Curve<T> {
    fn eq(&self, other: &Self) -> bool {
        self.poly.is_proportional(&other.poly)
    }
}

/// The line `a x + b y + c = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineForm<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> LineForm<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Precondition("line needs a or b nonzero".into()));
        }
        Ok(LineForm { a, b, c })
    }

    /// Line through two distinct points.
    pub fn through(p: &Node<T>, r: &Node<T>) -> Result<Self> {
        let a = r.y.clone() - p.y.clone();
        let b = p.x.clone() - r.x.clone();
        let c = -(a.clone() * p.x.clone() + b.clone() * p.y.clone());
        Self::new(a, b, c)
    }

    pub fn poly(&self) -> Poly<T> {
        Poly::linear(self.a.clone(), self.b.clone(), self.c.clone())
    }

    pub fn contains(&self, p: &Node<T>) -> bool {
        (self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()).is_zero()
    }

    pub fn is_proportional(&self, other: &LineForm<T>) -> bool {
        self.poly().is_proportional(&other.poly())
    }

    /// Point at parameter `t`: `x = t` when the line is not vertical,
    /// otherwise `y = t`.
    pub fn point_at(&self, t: &T) -> Node<T> {
        if !self.b.is_zero() {
            let y = -(self.a.clone() * t.clone() + self.c.clone()) / self.b.clone();
            Node::new(t.clone(), y)
        } else {
            Node::new(-self.c.clone() / self.a.clone(), t.clone())
        }
    }
}

/// `{"a": .., "b": .., "c": ..}` for the line `a*x + b*y + c = 0`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LineRepr {
    a: ScalarRepr,
    b: ScalarRepr,
    c: ScalarRepr,
}

impl LineRepr {
    pub fn from_line<T: Scalar>(l: &LineForm<T>) -> Self {
        LineRepr {
            a: ScalarRepr::from_scalar(&l.a),
            b: ScalarRepr::from_scalar(&l.b),
            c: ScalarRepr::from_scalar(&l.c),
        }
    }

    pub fn to_line<T: Scalar + FromStr>(&self) -> Result<LineForm<T>> {
        LineForm::new(self.a.parse()?, self.b.parse()?, self.c.parse()?)
    }
}

impl<T: Scalar> Serialize for LineForm<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LineRepr::from_line(self).serialize(s)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for LineForm<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        LineRepr::deserialize(d)?.to_line().map_err(serde::de::Error::custom)
    }
}

/// Deterministic source of points on a curve, addressed by index.
#[derive(Clone, Debug)]
pub enum CurveSampler<T> {
    Line(LineForm<T>),
    /// Pairwise non-proportional lines, visited round-robin.
    LineUnion(Vec<LineForm<T>>),
    /// `t ↦ (x_num(t) / x_den(t), y_num(t) / y_den(t))` with univariate
    /// coefficients listed from the constant term up. Parameters where a
    /// denominator vanishes are skipped.
    RationalParam { x_num: Vec<T>, x_den: Vec<T>, y_num: Vec<T>, y_den: Vec<T> },
}

fn eval_univariate<T: Scalar>(coeffs: &[T], t: &T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
}

impl<T: Scalar> CurveSampler<T> {
    pub fn line_union(lines: Vec<LineForm<T>>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Precondition("line union needs at least one line".into()));
        }
        for (i, l) in lines.iter().enumerate() {
            if lines[..i].iter().any(|m| m.is_proportional(l)) {
                return Err(Error::Precondition(format!("line {i} repeats an earlier line")));
            }
        }
        Ok(CurveSampler::LineUnion(lines))
    }

    /// Candidate number `index`; `None` when that parameter is excluded.
    /// Parameters run over 0, 1, -1, 2, -2, ...
    pub fn point(&self, index: usize) -> Option<Node<T>> {
        match self {
            CurveSampler::Line(l) => Some(l.point_at(&scalar_from_int(integer_zigzag(index)))),
            CurveSampler::LineUnion(lines) => {
                let l = &lines[index % lines.len()];
                Some(l.point_at(&scalar_from_int(integer_zigzag(index / lines.len()))))
            }
            CurveSampler::RationalParam { x_num, x_den, y_num, y_den } => {
                let t: T = scalar_from_int(integer_zigzag(index));
                let xd = eval_univariate(x_den, &t);
                let yd = eval_univariate(y_den, &t);
                if xd.is_zero() || yd.is_zero() {
                    return None;
                }
                Some(Node::new(eval_univariate(x_num, &t) / xd, eval_univariate(y_num, &t) / yd))
            }
        }
    }

    pub fn points(&self) -> impl Iterator<Item = Node<T>> + '_ {
        (0..).filter_map(move |i| self.point(i))
    }

    /// The curve this sampler walks, when it is determined by the sampler.
    pub fn curve(&self) -> Option<Result<Curve<T>>> {
        match self {
            CurveSampler::Line(l) => Some(Curve::from_lines(std::slice::from_ref(l))),
            CurveSampler::LineUnion(lines) => Some(Curve::from_lines(lines)),
            CurveSampler::RationalParam { .. } => None,
        }
    }
}

/// Whether `q` passes through exactly `d(n, deg q)` nodes of the
/// `n`-independent set `xs`.
pub fn is_maximal_curve<T: Scalar>(q: &Curve<T>, xs: &NodeSet<T>, n: usize) -> Result<bool> {
    let d = d_star(n, q.degree())?;
    if !is_n_independent(xs, n) {
        return Err(Error::NotIndependent(n));
    }
    if xs.len() < d {
        return Err(Error::Precondition(format!(
            "maximality needs at least d(n,k) = {d} nodes, got {}",
            xs.len()
        )));
    }
    Ok(xs.on_curve(q.poly()).len() == d)
}

/// Whether `a` has a fundamental polynomial in Π_n divisible by `q`.
///
/// When `xs` is not poised the fundamental polynomial is not unique; this
/// accepts if any of them is divisible, by solving for `r` in
/// `(q r)(a) = 1`, `(q r)(b) = 0` for the other nodes `b`.
pub fn node_uses<T: Scalar>(a: &Node<T>, xs: &NodeSet<T>, n: usize, q: &Curve<T>) -> Result<bool> {
    if fundamental_polynomial(a, xs, n)?.is_none() {
        return Err(Error::Precondition(format!("node {a} has no fundamental polynomial")));
    }
    if q.degree() > n {
        return Ok(false);
    }
    let m = n - q.degree();
    let rows = xs.iter().map(|b| {
        let qb = b.eval(q.poly());
        monomials_at(&b.x, &b.y, m).into_iter().map(|v| v * qb.clone()).collect()
    });
    let system = Matrix::from_rows(dim_pi(m), rows);
    let rhs: Vec<T> = xs.iter().map(|b| if b == a { T::one() } else { T::zero() }).collect();
    Ok(system.solve(&rhs).is_some())
}

/// Grows the `n`-independent set `xs ⊂ q` to `d(n, deg q)` nodes on `q`,
/// taking sampler candidates in order whenever they raise the collocation
/// rank.
///
/// `q` must have no multiple components; for line unions the sampler
/// constructor checks this, otherwise it is the caller's responsibility.
/// Running out of [`SAMPLER_BUDGET`] candidates usually means it was not.
pub fn extend_on_curve<T: Scalar>(
    xs: &NodeSet<T>,
    sampler: &CurveSampler<T>,
    q: &Curve<T>,
    n: usize,
) -> Result<NodeSet<T>> {
    let d = d_star(n, q.degree())?;
    if xs.iter().any(|a| !q.contains(a)) {
        return Err(Error::Precondition("every node must lie on the curve".into()));
    }
    if xs.len() > d {
        return Err(Error::Precondition(format!("more than d(n,k) = {d} nodes on the curve")));
    }
    let mut echelon = RowEchelon::new(dim_pi(n));
    for a in xs {
        if !echelon.insert(&monomials_at(&a.x, &a.y, n)) {
            return Err(Error::NotIndependent(n));
        }
    }
    let mut out = xs.clone();
    let mut drawn = 0;
    let mut index = 0;
    while out.len() < d {
        if drawn == SAMPLER_BUDGET {
            return Err(Error::BudgetExhausted(SAMPLER_BUDGET));
        }
        let candidate = sampler.point(index);
        index += 1;
        let Some(a) = candidate else {
            continue;
        };
        drawn += 1;
        if !q.contains(&a) {
            return Err(Error::Precondition(format!("sampler emitted {a}, which is off the curve")));
        }
        if out.contains(&a) {
            continue;
        }
        if echelon.insert(&monomials_at(&a.x, &a.y, n)) {
            out.push(a)?;
        }
    }
    Ok(out)
}
