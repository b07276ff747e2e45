//! On-disk formats read and written by the command line tool.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curves::{Curve, LineForm, LineRepr};
use crate::error::{Error, Result};
use crate::json::ScalarRepr;
use crate::poly::Poly;
use crate::{QCurve, QLineForm, QNodeSet, QPoly, Rational};

/// `{"n": 2, "nodes": [["0", "1/2"], ...], "meta": {...}}`
#[derive(Debug, Serialize, Deserialize)]
pub struct NodeSetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub nodes: QNodeSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

/// A curve given by coefficients, by a list of lines whose product it is,
/// or both (they must agree up to scale).
#[derive(Debug, Default, Serialize, Deserialize)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<LineRepr>>,
}

pub struct ParsedCurve {
    pub curve: QCurve,
    pub lines: Option<Vec<QLineForm>>,
}

impl CurveFile {
    pub fn from_curve(curve: &QCurve, lines: Option<&[QLineForm]>) -> Self {
        let poly = curve.poly();
        CurveFile {
            n: Some(poly.degree_bound()),
            coeffs: Some(poly.coeffs().iter().map(ScalarRepr::from_scalar).collect()),
            degree: Some(curve.degree()),
            lines: lines.map(|ls| ls.iter().map(LineRepr::from_line).collect()),
        }
    }

    pub fn parse(&self) -> Result<ParsedCurve> {
        let lines = self
            .lines
            .as_ref()
            .map(|ls| ls.iter().map(|l| l.to_line()).collect::<Result<Vec<LineForm<Rational>>>>())
            .transpose()?;
        let from_coeffs = match (&self.n, &self.coeffs) {
            (Some(n), Some(cs)) => {
                let cs = cs.iter().map(|c| c.parse()).collect::<Result<Vec<Rational>>>()?;
                Some(Poly::try_new(*n, cs)?)
            }
            (None, None) => None,
            _ => return Err(Error::Parse("curve needs both \"n\" and \"coeffs\"".into())),
        };
        let curve = match (&lines, from_coeffs) {
            (Some(ls), Some(p)) => {
                let c = Curve::from_lines(ls)?;
                if !c.poly().is_proportional(&p) {
                    return Err(Error::Parse("curve coefficients disagree with its lines".into()));
                }
                c
            }
            (Some(ls), None) => Curve::from_lines(ls)?,
            (None, Some(p)) => Curve::new(p)?,
            (None, None) => return Err(Error::Parse("curve needs coefficients or lines".into())),
        };
        if let Some(d) = self.degree {
            if d != curve.degree() {
                return Err(Error::Parse(format!(
                    "declared degree {d} but the polynomial has degree {}",
                    curve.degree()
                )));
            }
        }
        Ok(ParsedCurve { curve, lines })
    }
}

pub fn read_input(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

pub fn read_nodes(path: Option<&Path>) -> Result<NodeSetFile> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("node set: {e}")))
}

pub fn read_curve(path: &Path) -> Result<ParsedCurve> {
    let text = read_input(Some(path))?;
    let file: CurveFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("curve: {e}")))?;
    file.parse()
}

/// Poly as JSON with an added human-readable `text` field.
#[derive(Debug, Serialize)]
pub struct PolyOut {
    #[serde(flatten)]
    pub poly: QPoly,
    pub text: String,
}

impl PolyOut {
    pub fn new(poly: QPoly) -> Self {
        let text = poly.to_string();
        PolyOut { poly, text }
    }
}
