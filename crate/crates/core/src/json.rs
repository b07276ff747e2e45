//! JSON interchange: scalars travel as canonical strings such as `"-3/2"`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// A scalar on the wire. Serializes as a string; deserializes from a string
/// or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Int(i64),
}

impl ScalarRepr {
    pub fn from_scalar<T: Scalar>(v: &T) -> Self {
        ScalarRepr::Text(v.to_string())
    }

    pub fn parse<T: FromStr>(&self) -> Result<T> {
        let text = match self {
            ScalarRepr::Text(s) => s.trim().to_string(),
            ScalarRepr::Int(i) => i.to_string(),
        };
        text.parse()
            .map_err(|_| Error::Parse(format!("invalid scalar {text:?}")))
    }
}
