//! JSON exchange formats for algebras and bimodules. Scalars travel as
//! canonical strings (`"3"`, `"-1/2"`, `"4 mod 7"`).

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, RawAlgebra};
use crate::bimodule::{Bimodule, BimoduleError, RawBimodule};
use crate::linalg::{FieldSpec, LinalgError, Matrix, Scalar};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{source_name}: invalid JSON: {message}")]
    Json { source_name: String, message: String },
    #[error("{location}: {message}")]
    Shape { location: String, message: String },
    #[error("{location}: {error}")]
    Scalar { location: String, error: LinalgError },
    #[error("{0}")]
    Field(LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error("module document refers to a different algebra than the one given")]
    AlgebraMismatch,
}

impl DocumentError {
    pub fn is_io(&self) -> bool {
        matches!(self, DocumentError::Io { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDocument {
    /// Only `"Q"` is accepted.
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u32,
    },
}

impl FieldDocument {
    pub fn from_spec(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => FieldDocument::Named("Q".to_string()),
            FieldSpec::Prime(p) => FieldDocument::Prime { p },
        }
    }

    pub fn to_spec(&self) -> Result<FieldSpec, DocumentError> {
        match self {
            FieldDocument::Named(s) if s == "Q" => Ok(FieldSpec::Rationals),
            FieldDocument::Named(s) => Err(DocumentError::Shape {
                location: "field".into(),
                message: format!("unknown field {s:?}, expected \"Q\" or {{\"Fp\": p}}"),
            }),
            FieldDocument::Prime { p } => FieldSpec::prime(*p).map_err(DocumentError::Field),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub field: FieldDocument,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    /// `mul[i][j]` holds the coordinates of `e_i e_j`.
    pub mul: Vec<Vec<Vec<String>>>,
}

impl AlgebraDocument {
    pub fn from_algebra(a: &Algebra) -> Self {
        let n = a.dim();
        AlgebraDocument {
            field: FieldDocument::from_spec(a.field()),
            name: a.name().to_string(),
            dim: n,
            basis: a.basis_names().to_vec(),
            unit: strings(a.unit()),
            mul: (0..n).map(|i| (0..n).map(|j| strings(a.structure_constants(i, j))).collect()).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra, DocumentError> {
        let field = self.field.to_spec()?;
        let n = self.dim;
        expect_len("basis", self.basis.len(), n)?;
        let unit = scalars(field, &self.unit, "unit", n)?;
        expect_len("mul", self.mul.len(), n)?;
        let mut mul = Vec::with_capacity(n);
        for (i, row) in self.mul.iter().enumerate() {
            expect_len(&format!("mul[{i}]"), row.len(), n)?;
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, v)| scalars(field, v, &format!("mul[{i}][{j}]"), n))
                .collect::<Result<Vec<_>, _>>()?;
            mul.push(parsed);
        }
        Ok(Algebra::new(RawAlgebra { name: self.name.clone(), field, basis: self.basis.clone(), unit, mul })?)
    }

    pub fn from_json(text: &str, source_name: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| json_error(source_name, e))
    }
}

/// Either an inline algebra or a path, resolved relative to the module file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Inline(AlgebraDocument),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDocument {
    pub algebra: AlgebraRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    /// One `dim x dim` matrix (list of rows) per algebra basis element.
    pub left_action: Vec<Vec<Vec<String>>>,
    pub right_action: Vec<Vec<Vec<String>>>,
}

impl ModuleDocument {
    pub fn from_bimodule(m: &Bimodule) -> Self {
        ModuleDocument {
            algebra: AlgebraRef::Inline(AlgebraDocument::from_algebra(m.algebra())),
            name: Some(m.name().to_string()),
            dim: m.dim(),
            left_action: m.left_basis_ops().iter().map(Matrix::to_strings).collect(),
            right_action: m.right_basis_ops().iter().map(Matrix::to_strings).collect(),
        }
    }

    pub fn from_json(text: &str, source_name: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| json_error(source_name, e))
    }

    /// Resolves the algebra reference; `base_dir` anchors relative paths.
    pub fn algebra_document(&self, base_dir: &Path) -> Result<AlgebraDocument, DocumentError> {
        match &self.algebra {
            AlgebraRef::Inline(doc) => Ok(doc.clone()),
            AlgebraRef::Path(p) => {
                let path = base_dir.join(p);
                let text = read(&path)?;
                AlgebraDocument::from_json(&text, &path.display().to_string())
            }
        }
    }

    /// Builds the bimodule over `algebra`, which must agree with the
    /// algebra the document refers to.
    pub fn to_bimodule(&self, algebra: Arc<Algebra>, base_dir: &Path) -> Result<Bimodule, DocumentError> {
        let declared = self.algebra_document(base_dir)?.to_algebra()?;
        if declared != *algebra {
            return Err(DocumentError::AlgebraMismatch);
        }
        let field = algebra.field();
        let n = algebra.dim();
        let parse_side = |mats: &[Vec<Vec<String>>], side: &str| -> Result<Vec<Matrix>, DocumentError> {
            expect_len(side, mats.len(), n)?;
            mats.iter().enumerate().map(|(i, m)| matrix(field, m, &format!("{side}[{i}]"), self.dim)).collect()
        };
        let left = parse_side(&self.left_action, "left_action")?;
        let right = parse_side(&self.right_action, "right_action")?;
        let name = self.name.clone().unwrap_or_else(|| "module".to_string());
        Ok(Bimodule::new(algebra, RawBimodule { name, dim: self.dim, left, right })?)
    }
}

/// Hex SHA-256 of the canonical (compact, re-serialized) form of a document.
pub fn digest<T: Serialize>(doc: &T) -> String {
    let bytes = serde_json::to_vec(doc).expect("documents serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn to_pretty_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn read(path: &Path) -> Result<String, DocumentError> {
    fs::read_to_string(path).map_err(|e| DocumentError::Io { path: path.to_path_buf(), message: e.to_string() })
}

pub fn write(path: &Path, contents: &str) -> Result<(), DocumentError> {
    fs::write(path, contents).map_err(|e| DocumentError::Io { path: path.to_path_buf(), message: e.to_string() })
}

pub fn load_algebra(path: &Path) -> Result<(AlgebraDocument, Algebra), DocumentError> {
    let doc = AlgebraDocument::from_json(&read(path)?, &path.display().to_string())?;
    let algebra = doc.to_algebra()?;
    Ok((doc, algebra))
}

fn json_error(source_name: &str, e: serde_json::Error) -> DocumentError {
    DocumentError::Json { source_name: source_name.to_string(), message: e.to_string() }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn expect_len(location: &str, found: usize, expected: usize) -> Result<(), DocumentError> {
    if found == expected {
        Ok(())
    } else {
        Err(DocumentError::Shape {
            location: location.to_string(),
            message: format!("expected {expected} entries, found {found}"),
        })
    }
}

fn scalars(field: FieldSpec, v: &[String], location: &str, n: usize) -> Result<Vec<Scalar>, DocumentError> {
    expect_len(location, v.len(), n)?;
    v.iter()
        .enumerate()
        .map(|(k, s)| {
            field.parse(s).map_err(|error| DocumentError::Scalar { location: format!("{location}[{k}]"), error })
        })
        .collect()
}

fn matrix(field: FieldSpec, rows: &[Vec<String>], location: &str, dim: usize) -> Result<Matrix, DocumentError> {
    expect_len(location, rows.len(), dim)?;
    let mut data = Vec::with_capacity(dim * dim);
    for (r, row) in rows.iter().enumerate() {
        data.extend(scalars(field, row, &format!("{location}[{r}]"), dim)?);
    }
    Ok(Matrix::new(field, dim, dim, data).expect("shape checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_round_trip() {
        for name in catalog::NAMES {
            let a = catalog::algebra(name).unwrap();
            let doc = AlgebraDocument::from_algebra(&a);
            let text = to_pretty_json(&doc);
            let back = AlgebraDocument::from_json(&text, "mem").unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_algebra().unwrap(), a);
        }
    }

    #[test]
    fn module_round_trip() {
        let e = catalog::builtin("t2").unwrap();
        let doc = ModuleDocument::from_bimodule(&e.free2);
        let back = ModuleDocument::from_json(&to_pretty_json(&doc), "mem").unwrap();
        let m = back.to_bimodule(e.algebra.clone(), Path::new(".")).unwrap();
        assert_eq!(m, e.free2);
    }

    #[test]
    fn prime_field_documents() {
        let a = catalog::m2(FieldSpec::prime(5).unwrap());
        let doc = AlgebraDocument::from_algebra(&a);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.starts_with(r#"{"field":{"Fp":5}"#));
        assert!(text.contains(r#""1 mod 5""#));
        assert_eq!(AlgebraDocument::from_json(&text, "mem").unwrap().to_algebra().unwrap(), a);
    }

    #[test]
    fn bad_scalar_reports_location() {
        let mut doc = AlgebraDocument::from_algebra(&catalog::algebra("dual_numbers").unwrap());
        doc.mul[1][1][0] = "x".into();
        let err = doc.to_algebra().unwrap_err().to_string();
        assert!(err.starts_with("mul[1][1][0]"), "{err}");
    }

    #[test]
    fn unknown_field_rejected() {
        let mut doc = AlgebraDocument::from_algebra(&catalog::algebra("trivial").unwrap());
        doc.field = FieldDocument::Named("R".into());
        assert!(matches!(doc.to_algebra(), Err(DocumentError::Shape { .. })));
        doc.field = FieldDocument::Prime { p: 6 };
        assert!(matches!(doc.to_algebra(), Err(DocumentError::Field(_))));
    }

    #[test]
    fn digest_is_stable() {
        let doc = AlgebraDocument::from_algebra(&catalog::algebra("m2").unwrap());
        assert_eq!(digest(&doc), digest(&doc.clone()));
        assert_eq!(digest(&doc).len(), 64);
    }
}
