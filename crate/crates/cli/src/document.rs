//! The tensor input format.
//!
//! ```json
//! {
//!   "field_mode": "real",
//!   "name": "optional label",
//!   "omega": [[["1","0","0"], ...], ...]
//! }
//! ```
//!
//! `omega[i][j][k]` (0-based here, `ω_{i+1,j+1,k+1}` in the usual 1-based
//! notation) is the coefficient of `e_k` in `e_i e_j`. Each entry is a string
//! literal such as `"-3/7"` or `"1+2i"`, or an object `{"re": "...", "im": "..."}`.

use std::path::Path;

use clap::ValueEnum;
use ideals3::families::FamilySpec;
use ideals3::{BaseScalar, FieldMode, StructureTensor};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for FieldMode {
    fn from(f: FieldArg) -> FieldMode {
        match f {
            FieldArg::Real => FieldMode::RealRational,
            FieldArg::Complex => FieldMode::ComplexGaussian,
        }
    }
}

impl From<FieldMode> for FieldArg {
    fn from(m: FieldMode) -> FieldArg {
        match m {
            FieldMode::RealRational => FieldArg::Real,
            FieldMode::ComplexGaussian => FieldArg::Complex,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLiteral {
    Text(String),
    Gaussian { re: String, im: String },
}

impl ScalarLiteral {
    pub fn parse(&self) -> Result<BaseScalar, CliError> {
        Ok(match self {
            ScalarLiteral::Text(s) => BaseScalar::parse(s)?,
            ScalarLiteral::Gaussian { re, im } => BaseScalar::parse_parts(re, im)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorDocument {
    pub field_mode: FieldArg,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub omega: Vec<Vec<Vec<ScalarLiteral>>>,
}

impl TensorDocument {
    pub fn from_json(text: &str, origin: &str) -> Result<Self, CliError> {
        let doc: TensorDocument = serde_json::from_str(text).map_err(|e| CliError::json(origin, &e))?;
        let shape_ok = doc.omega.len() == 3
            && doc.omega.iter().all(|m| m.len() == 3 && m.iter().all(|r| r.len() == 3));
        if !shape_ok {
            return Err(CliError::Parse {
                origin: origin.into(),
                message: "omega must be a 3×3×3 array (27 entries)".into(),
            });
        }
        Ok(doc)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text, &path.display().to_string())
    }

    pub fn from_tensor(t: &StructureTensor, name: Option<String>) -> Self {
        let omega = t
            .entries()
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(|c| ScalarLiteral::Text(c.to_string())).collect()).collect())
            .collect();
        TensorDocument {
            field_mode: t.mode().into(),
            name,
            provenance: None,
            omega,
        }
    }

    /// The tensor, in `mode` if given and in the document's own mode otherwise.
    pub fn to_tensor(&self, mode: Option<FieldMode>) -> Result<StructureTensor, CliError> {
        let mut flat = Vec::with_capacity(27);
        for (i, m) in self.omega.iter().enumerate() {
            for (j, r) in m.iter().enumerate() {
                for (k, c) in r.iter().enumerate() {
                    flat.push(c.parse().map_err(|e| CliError::Parse {
                        origin: format!("omega[{i}][{j}][{k}]"),
                        message: e.to_string(),
                    })?);
                }
            }
        }
        let w = std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| flat[9 * i + 3 * j + k].clone())));
        Ok(StructureTensor::new(w, mode.unwrap_or(self.field_mode.into()))?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

/// Where a tensor came from: a document on disk or a named family.
#[derive(Clone, Debug)]
pub enum TensorSource {
    File(std::path::PathBuf),
    Family { name: String, params: Vec<String> },
}

impl TensorSource {
    /// `--family name p1 p2 …` as collected by clap.
    pub fn family(values: &[String]) -> Result<Self, CliError> {
        let (name, params) = values
            .split_first()
            .ok_or_else(|| CliError::Usage("--family needs a family name".into()))?;
        Ok(TensorSource::Family {
            name: name.clone(),
            params: params.to_vec(),
        })
    }

    pub fn label(&self) -> String {
        match self {
            TensorSource::File(p) => p.display().to_string(),
            TensorSource::Family { name, params } if params.is_empty() => format!("family {name}"),
            TensorSource::Family { name, params } => format!("family {name} {}", params.join(" ")),
        }
    }

    /// Load the tensor and a document echoing it.
    pub fn load(&self, field: Option<FieldArg>) -> Result<(StructureTensor, TensorDocument), CliError> {
        let mode = field.map(FieldMode::from);
        match self {
            TensorSource::File(path) => {
                let doc = TensorDocument::read(path)?;
                let t = doc.to_tensor(mode)?;
                let mut doc = doc;
                doc.field_mode = t.mode().into();
                Ok((t, doc))
            }
            TensorSource::Family { name, params } => {
                let spec = FamilySpec::parse(name, params)?;
                let t = spec.build(mode.unwrap_or(FieldMode::RealRational))?;
                let mut doc = TensorDocument::from_tensor(&t, Some(spec.to_string()));
                doc.provenance = Some(self.label());
                Ok((t, doc))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones_json() -> String {
        let row = r#"["1","1","1"]"#;
        let m = format!("[{row},{row},{row}]");
        format!(r#"{{"field_mode":"real","omega":[{m},{m},{m}]}}"#)
    }

    #[test]
    fn parses_and_round_trips() {
        let doc = TensorDocument::from_json(&ones_json(), "test").unwrap();
        let t = doc.to_tensor(None).unwrap();
        assert_eq!(t.w(2, 3, 1), BaseScalar::from_int(1));
        let again = TensorDocument::from_tensor(&t, None);
        assert_eq!(again.to_tensor(None).unwrap(), t);
    }

    #[test]
    fn gaussian_object_literal() {
        let lit: ScalarLiteral = serde_json::from_str(r#"{"re":"1/2","im":"-3"}"#).unwrap();
        assert_eq!(lit.parse().unwrap(), BaseScalar::parse("1/2-3i").unwrap());
    }

    #[test]
    fn reports_position_of_syntax_errors() {
        let err = TensorDocument::from_json("{\n  \"field_mode\": \"real\",\n  \"omega\": [1,\n", "x.json").unwrap_err();
        match err {
            CliError::Json { line, .. } => assert!(line >= 3),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn rejects_wrong_shape() {
        let doc = r#"{"field_mode":"real","omega":[[["1"]]]}"#;
        assert!(matches!(TensorDocument::from_json(doc, "x"), Err(CliError::Parse { .. })));
    }

    #[test]
    fn complex_entries_need_complex_mode() {
        let text = ones_json().replacen("\"1\"", "\"i\"", 1);
        let doc = TensorDocument::from_json(&text, "x").unwrap();
        assert!(doc.to_tensor(None).is_err());
        assert!(doc.to_tensor(Some(FieldMode::ComplexGaussian)).is_ok());
    }
}
