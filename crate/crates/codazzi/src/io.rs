//! JSON file formats.
//!
//! Algebra files:
//! `{"dim": n, "field": "rational"|"float", "brackets": [{"i": 1, "j": 2,
//! "terms": [{"k": 4, "value": "3/7"}]}]}` — indices are 1-based, rational
//! values are strings `"p/q"`, float values are plain numbers, unlisted pairs
//! `i < j` vanish, and entries with `i >= j` are rejected.
//!
//! Metric files carry `{"gram": [[...]]}` and operator files
//! `{"matrix": [[...]]}` in the same scalar encoding as the algebra they
//! accompany.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Rat, Scalar};
use crate::LieAlgebra;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarValue {
    Number(f64),
    Text(String),
}

/// Scalar types that know their JSON encoding.
pub trait JsonScalar: Scalar {
    const FIELD: &'static str;
    fn from_value(v: &ScalarValue) -> Result<Self>;
    fn to_value(&self) -> ScalarValue;
}

impl JsonScalar for f64 {
    const FIELD: &'static str = "float";

    fn from_value(v: &ScalarValue) -> Result<Self> {
        match v {
            ScalarValue::Number(x) if x.is_finite() => Ok(*x),
            ScalarValue::Number(_) => Err(Error::InvalidInput("non-finite number".into())),
            ScalarValue::Text(_) => Err(Error::InvalidInput(
                "float-mode values must be JSON numbers".into(),
            )),
        }
    }

    fn to_value(&self) -> ScalarValue {
        ScalarValue::Number(*self)
    }
}

impl JsonScalar for Rat {
    const FIELD: &'static str = "rational";

    fn from_value(v: &ScalarValue) -> Result<Self> {
        match v {
            ScalarValue::Text(s) => Rat::from_str(s.trim())
                .map_err(|e| Error::InvalidInput(format!("bad rational `{s}`: {e}"))),
            ScalarValue::Number(_) => Err(Error::InvalidInput(
                "rational-mode values must be strings like \"3/7\"".into(),
            )),
        }
    }

    fn to_value(&self) -> ScalarValue {
        ScalarValue::Text(self.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermEntry {
    pub k: usize,
    pub value: ScalarValue,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub field: String,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MetricFile {
    pub gram: Vec<Vec<ScalarValue>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    pub matrix: Vec<Vec<ScalarValue>>,
}

/// An algebra in whichever scalar mode its file declared.
pub enum AnyAlgebra {
    Rational(LieAlgebra<Rat>),
    Float(LieAlgebra<f64>),
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Rational(a) => a.dim(),
            AnyAlgebra::Float(a) => a.dim(),
        }
    }

    pub fn field(&self) -> &'static str {
        match self {
            AnyAlgebra::Rational(_) => "rational",
            AnyAlgebra::Float(_) => "float",
        }
    }

    pub fn to_float(&self) -> LieAlgebra<f64> {
        match self {
            AnyAlgebra::Rational(a) => a.to_float(),
            AnyAlgebra::Float(a) => a.clone(),
        }
    }
}

fn algebra_from_file<S: JsonScalar>(file: &AlgebraFile) -> Result<LieAlgebra<S>> {
    let dim = file.dim;
    if dim == 0 {
        return Err(Error::InvalidInput("dim must be positive".into()));
    }
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for b in &file.brackets {
        if b.i >= b.j {
            return Err(Error::InvalidInput(format!(
                "bracket entry ({}, {}) must have i < j",
                b.i, b.j
            )));
        }
        if b.i < 1 || b.j > dim {
            return Err(Error::InvalidInput(format!(
                "bracket index ({}, {}) out of range 1..{dim}",
                b.i, b.j
            )));
        }
        if !seen.insert((b.i, b.j)) {
            return Err(Error::InvalidInput(format!(
                "duplicate bracket entry ({}, {})",
                b.i, b.j
            )));
        }
        for t in &b.terms {
            if t.k < 1 || t.k > dim {
                return Err(Error::InvalidInput(format!(
                    "term index {} out of range 1..{dim}",
                    t.k
                )));
            }
            entries.push((b.i - 1, b.j - 1, t.k - 1, S::from_value(&t.value)?));
        }
    }
    let alg = LieAlgebra::from_brackets(dim, &entries)?;
    Ok(match &file.basis_labels {
        Some(labels) => alg.with_labels(labels.clone()),
        None => alg,
    })
}

pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    match file.field.as_str() {
        "rational" => Ok(AnyAlgebra::Rational(algebra_from_file::<Rat>(&file)?)),
        "float" => Ok(AnyAlgebra::Float(algebra_from_file::<f64>(&file)?)),
        other => Err(Error::InvalidInput(format!(
            "field must be \"rational\" or \"float\", got `{other}`"
        ))),
    }
}

/// Loads an algebra file, returning the algebra and the input digest.
pub fn load_algebra(path: &Path) -> Result<(AnyAlgebra, String)> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::InvalidInput("input is not UTF-8".into()))?;
    Ok((parse_algebra(&text)?, digest(&bytes)))
}

pub fn parse_matrix<S: JsonScalar>(values: &[Vec<ScalarValue>], dim: usize) -> Result<Matrix<S>> {
    if values.len() != dim || values.iter().any(|row| row.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: values.len(),
        });
    }
    let mut out = Matrix::zeros(dim, dim);
    for (i, row) in values.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[(i, j)] = S::from_value(v)?;
        }
    }
    Ok(out)
}

pub fn load_metric<S: JsonScalar>(path: &Path, dim: usize) -> Result<Matrix<S>> {
    let text = std::fs::read_to_string(path)?;
    let file: MetricFile = serde_json::from_str(&text)?;
    parse_matrix(&file.gram, dim)
}

pub fn load_operator<S: JsonScalar>(path: &Path, dim: usize) -> Result<Matrix<S>> {
    let text = std::fs::read_to_string(path)?;
    let file: OperatorFile = serde_json::from_str(&text)?;
    parse_matrix(&file.matrix, dim)
}

/// Serializes an algebra in its scalar mode's encoding.
pub fn algebra_to_file<S: JsonScalar>(alg: &LieAlgebra<S>) -> AlgebraFile {
    let dim = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut terms = Vec::new();
            for k in 0..dim {
                let v = alg.c(i, j, k);
                if !v.is_zero() {
                    terms.push(TermEntry {
                        k: k + 1,
                        value: v.to_value(),
                    });
                }
            }
            if !terms.is_empty() {
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    terms,
                });
            }
        }
    }
    AlgebraFile {
        dim,
        field: S::FIELD.to_string(),
        brackets,
        basis_labels: alg.labels().map(|l| l.to_vec()),
    }
}

pub fn matrix_to_values<S: JsonScalar>(m: &Matrix<S>) -> Vec<Vec<ScalarValue>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_value()).collect())
        .collect()
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}
