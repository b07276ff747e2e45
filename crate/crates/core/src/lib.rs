//! Exact computations on planar node sets for bivariate polynomial
//! interpolation: `n`-independence, poisedness, vanishing spaces,
//! fundamental polynomials, maximal curves, and checkers for the
//! uniqueness and defect results on curves through `n`-independent nodes.
//!
//! The core types are generic over a [`Scalar`] field; decisions are rank
//! computations, so they are only meaningful over an exact field. The
//! aliases below fix that field to arbitrary-precision rationals.

pub mod cli;
pub mod construct;
pub mod curves;
pub mod error;
pub mod exact;
pub mod json;
pub mod nodes;
pub mod poly;
pub mod theorems;

pub use error::{Error, Result};
pub use exact::{Matrix, Rref, RowEchelon, Scalar};

pub type Rational = num_rational::BigRational;

pub type QMatrix = exact::Matrix<Rational>;
pub type QPoly = poly::Poly<Rational>;
pub type QNode = nodes::Node<Rational>;
pub type QNodeSet = nodes::NodeSet<Rational>;
pub type QVanishingSpace = nodes::VanishingSpace<Rational>;
pub type QCurve = curves::Curve<Rational>;
pub type QLineForm = curves::LineForm<Rational>;
pub type QCurveSampler = curves::CurveSampler<Rational>;
