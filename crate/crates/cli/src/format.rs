//! The module file: a pretty-printed JSON document with rationals written
//! as strings.
//!
//! Field order is fixed (`dim`, `X`, `Y`, `kappa`, `lambda`, `mu`, `meta`)
//! and `meta` is a sorted map, so serializing the same module twice gives
//! the same bytes.

use std::collections::BTreeMap;

use bannai_ito::bimodule::{BIModule, Family, Origin, TwistSign};
use bannai_ito::linalg::{parse_rational, Matrix, Rational, Vector};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid module file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {input:?} is not a rational in lowest terms (expected \"n\" or \"p/q\")")]
    Rational { field: String, input: String },
    #[error("{0}")]
    Shape(String),
    #[error("meta: {0}")]
    Meta(String),
    #[error(transparent)]
    Module(#[from] bannai_ito::Error),
}

/// On-disk form of a module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dim: usize,
    #[serde(rename = "X")]
    pub x: Vec<Vec<String>>,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<String>>,
    pub kappa: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    /// Provenance: `family`, `d`, `a`, `b`, `c`, `twist`, `label`.
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

/// `"n"` or `"p/q"`, lowest terms, positive denominator.
pub fn rational_to_string(q: &Rational) -> String {
    q.to_string()
}

/// Accepts only the canonical spelling produced by [`rational_to_string`]:
/// no whitespace, no `+`, no leading zeros, no `"2/4"`, no `"3/1"`.
pub fn parse_canonical(field: &str, s: &str) -> Result<Rational, FormatError> {
    let err = || FormatError::Rational {
        field: field.to_string(),
        input: s.to_string(),
    };
    let q = parse_rational(s).map_err(|_| err())?;
    if rational_to_string(&q) != s {
        return Err(err());
    }
    Ok(q)
}

pub fn vector_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_to_string).collect()
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| vector_strings(r)).collect()
}

pub fn vectors_strings(vs: &[Vector]) -> Vec<Vec<String>> {
    vs.iter().map(|v| vector_strings(v)).collect()
}

fn parse_matrix(name: &str, dim: usize, rows: &[Vec<String>]) -> Result<Matrix, FormatError> {
    if dim == 0 {
        return Err(FormatError::Shape("dim must be positive".into()));
    }
    if rows.len() != dim {
        return Err(FormatError::Shape(format!(
            "{name} has {} rows, dim is {dim}",
            rows.len()
        )));
    }
    let mut parsed = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(FormatError::Shape(format!(
                "{name} row {r} has {} entries, dim is {dim}",
                row.len()
            )));
        }
        let row = row
            .iter()
            .enumerate()
            .map(|(c, s)| parse_canonical(&format!("{name}[{r}][{c}]"), s))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(row);
    }
    Matrix::from_rows(parsed).map_err(|e| FormatError::Shape(e.to_string()))
}

fn origin_meta(o: &Origin, meta: &mut BTreeMap<String, String>) {
    meta.insert("family".into(), o.family.as_str().into());
    meta.insert("d".into(), o.d.to_string());
    meta.insert("a".into(), rational_to_string(&o.a));
    meta.insert("b".into(), rational_to_string(&o.b));
    meta.insert("c".into(), rational_to_string(&o.c));
    meta.insert("twist".into(), o.twist.to_string());
}

fn meta_origin(meta: &BTreeMap<String, String>) -> Result<Option<Origin>, FormatError> {
    const KEYS: [&str; 6] = ["family", "d", "a", "b", "c", "twist"];
    if !KEYS.iter().any(|k| meta.contains_key(*k)) {
        return Ok(None);
    }
    let get = |k: &str| {
        meta.get(k)
            .ok_or_else(|| FormatError::Meta(format!("{k:?} missing (family parameters are all-or-nothing)")))
    };
    let family: Family = get("family")?.parse().map_err(FormatError::Meta)?;
    let d: usize = get("d")?
        .parse()
        .map_err(|_| FormatError::Meta(format!("d = {:?} is not a nonnegative integer", meta["d"])))?;
    let twist: TwistSign = match meta.get("twist") {
        Some(t) => t.parse().map_err(FormatError::Meta)?,
        None => TwistSign::IDENTITY,
    };
    Ok(Some(Origin {
        family,
        d,
        a: parse_canonical("meta.a", get("a")?)?,
        b: parse_canonical("meta.b", get("b")?)?,
        c: parse_canonical("meta.c", get("c")?)?,
        twist,
    }))
}

impl ModuleFile {
    pub fn from_module(m: &BIModule) -> Self {
        let mut meta = BTreeMap::new();
        if let Some(o) = m.origin() {
            origin_meta(o, &mut meta);
        }
        if !m.label().is_empty() {
            meta.insert("label".into(), m.label().into());
        }
        Self {
            dim: m.dim(),
            x: matrix_strings(m.x()),
            y: matrix_strings(m.y()),
            kappa: rational_to_string(m.kappa()),
            lambda: m.lambda().map(rational_to_string),
            mu: m.mu().map(rational_to_string),
            meta,
        }
    }

    pub fn to_module(&self) -> Result<BIModule, FormatError> {
        let x = parse_matrix("X", self.dim, &self.x)?;
        let y = parse_matrix("Y", self.dim, &self.y)?;
        let kappa = parse_canonical("kappa", &self.kappa)?;
        let lambda = self
            .lambda
            .as_deref()
            .map(|s| parse_canonical("lambda", s))
            .transpose()?;
        let mu = self.mu.as_deref().map(|s| parse_canonical("mu", s)).transpose()?;
        let origin = meta_origin(&self.meta)?;
        Ok(BIModule::new(x, y, kappa)?
            .with_central(lambda, mu)
            .with_label(self.meta.get("label").cloned().unwrap_or_default())
            .with_origin(origin))
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("strings and maps always serialize");
        s.push('\n');
        s
    }
}

pub fn read_module(text: &str) -> Result<BIModule, FormatError> {
    ModuleFile::parse(text)?.to_module()
}

pub fn write_module(m: &BIModule) -> String {
    ModuleFile::from_module(m).to_json()
}
