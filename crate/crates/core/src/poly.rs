//! Bivariate polynomials of bounded total degree, stored as dense
//! coefficient vectors in graded-lex order: 1, x, y, x², xy, y², x³, ...

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

/// Dimension of the space of polynomials of total degree at most `n`.
pub fn dim_pi(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// Position of `x^i y^j` in graded-lex order.
pub fn mono_index(i: usize, j: usize) -> usize {
    let t = i + j;
    t * (t + 1) / 2 + (t - i)
}

/// Inverse of [`mono_index`].
pub fn mono_unindex(index: usize) -> (usize, usize) {
    let mut t = 0;
    while dim_pi(t) <= index {
        t += 1;
    }
    let offset = index - t * (t + 1) / 2;
    (t - offset, offset)
}

/// Values of all monomials of degree at most `n` at `(x, y)`, in
/// graded-lex order.
pub fn monomials_at<T: Scalar>(x: &T, y: &T, n: usize) -> Vec<T> {
    let mut xp = vec![T::one()];
    let mut yp = vec![T::one()];
    for _ in 0..n {
        xp.push(xp.last().unwrap().clone() * x.clone());
        yp.push(yp.last().unwrap().clone() * y.clone());
    }
    let mut out = Vec::with_capacity(dim_pi(n));
    for t in 0..=n {
        for j in 0..=t {
            out.push(xp[t - j].clone() * yp[j].clone());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    n: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Panics if `coeffs.len() != dim_pi(n)`.
    pub fn new(n: usize, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len(), dim_pi(n), "coefficient count must be dim_pi(n)");
        Poly { n, coeffs }
    }

    pub fn try_new(n: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != dim_pi(n) {
            return Err(Error::Parse(format!(
                "expected {} coefficients for degree bound {n}, got {}",
                dim_pi(n),
                coeffs.len()
            )));
        }
        Ok(Poly { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Poly { n, coeffs: vec![T::zero(); dim_pi(n)] }
    }

    pub fn constant(c: T) -> Self {
        Poly { n: 0, coeffs: vec![c] }
    }

    pub fn monomial(i: usize, j: usize) -> Self {
        let mut p = Self::zero(i + j);
        p.coeffs[mono_index(i, j)] = T::one();
        p
    }

    /// The linear polynomial `a x + b y + c`.
    pub fn linear(a: T, b: T, c: T) -> Self {
        Poly { n: 1, coeffs: vec![c, a, b] }
    }

    pub fn degree_bound(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        let idx = mono_index(i, j);
        self.coeffs.get(idx).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Effective total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        let (i, j) = mono_unindex(last);
        Some(i + j)
    }

    /// Same polynomial with a different degree bound. Fails if a nonzero
    /// coefficient would be dropped.
    pub fn with_bound(&self, n: usize) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::DegreeOutOfRange(format!(
                    "polynomial of degree {d} does not fit degree bound {n}"
                )));
            }
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim_pi(n), T::zero());
        Ok(Poly { n, coeffs })
    }

    /// Shrinks the bound to the effective degree (0 for the zero polynomial).
    pub fn trimmed(&self) -> Self {
        let d = self.degree().unwrap_or(0);
        Poly { n: d, coeffs: self.coeffs[..dim_pi(d)].to_vec() }
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        monomials_at(x, y, self.n)
            .into_iter()
            .zip(&self.coeffs)
            .fold(T::zero(), |acc, (m, c)| acc + m * c.clone())
    }

    pub fn mul(&self, other: &Poly<T>) -> Poly<T> {
        let mut out = Self::zero(self.n + other.n);
        for (a_idx, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (ai, aj) = mono_unindex(a_idx);
            for (b_idx, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (bi, bj) = mono_unindex(b_idx);
                let k = mono_index(ai + bi, aj + bj);
                out.coeffs[k] = out.coeffs[k].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Poly<T>) -> Poly<T> {
        let n = self.n.max(other.n);
        let mut coeffs = vec![T::zero(); dim_pi(n)];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] = coeffs[k].clone() + c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] = coeffs[k].clone() + c.clone();
        }
        Poly { n, coeffs }
    }

    pub fn scale(&self, f: &T) -> Poly<T> {
        Poly { n: self.n, coeffs: self.coeffs.iter().map(|c| c.clone() * f.clone()).collect() }
    }

    /// Scaled so that the first nonzero coefficient in graded-lex order is 1.
    /// The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Poly<T> {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&(T::one() / lead.clone())),
            None => self.clone(),
        }
    }

    /// Whether `other = λ self` for some nonzero λ; degree bounds may differ.
    /// Two zero polynomials are proportional.
    pub fn is_proportional(&self, other: &Poly<T>) -> bool {
        let n = self.n.max(other.n);
        let a = self.with_bound(n).expect("growing the bound cannot fail");
        let b = other.with_bound(n).expect("growing the bound cannot fail");
        if a.is_zero() || b.is_zero() {
            return a.is_zero() && b.is_zero();
        }
        Matrix::from_rows(dim_pi(n), [a.coeffs, b.coeffs]).rank() == 1
    }

    /// Finds `r` of degree at most `n - deg(q)` with `p = q r`, by solving
    /// the linear system of the multiplication map `r ↦ q r`.
    pub fn divides(q: &Poly<T>, p: &Poly<T>, n: usize) -> Result<Option<Poly<T>>> {
        let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
        if dq > n {
            return Err(Error::DegreeOutOfRange(format!(
                "divisor degree {dq} exceeds bound {n}"
            )));
        }
        let target = p.with_bound(n)?;
        let m = n - dq;
        let q = q.trimmed();
        let columns: Vec<Vec<T>> = (0..dim_pi(m))
            .map(|idx| {
                let (i, j) = mono_unindex(idx);
                q.mul(&Poly::monomial(i, j))
                    .with_bound(n)
                    .expect("product degree is at most n")
                    .coeffs
            })
            .collect();
        let map = Matrix::from_columns(dim_pi(n), &columns);
        Ok(map.solve(&target.coeffs).map(|r| Poly { n: m, coeffs: r }))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, i: usize, j: usize) -> fmt::Result {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{j}")),
    }
    write!(f, "{}", parts.join("*"))
}

impl<T: Scalar> fmt::Display for Poly<T> {
    /// Human-readable form such as `1 - x - y` or `1/2*x^2*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let (i, j) = mono_unindex(idx);
            if i + j == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, i, j)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    coeffs: Vec<crate::json::ScalarRepr>,
}

impl<T: Scalar> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            n: self.n,
            coeffs: self.coeffs.iter().map(crate::json::ScalarRepr::from_scalar).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| c.parse())
            .collect::<Result<Vec<T>>>()
            .map_err(serde::de::Error::custom)?;
        Poly::try_new(repr.n, coeffs).map_err(serde::de::Error::custom)
    }
}
