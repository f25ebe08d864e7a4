//! Reading description files, with digests and located errors.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use falab::io::{algebra_from_json, fusion_from_json, hopf_from_json, module_from_json, DEFAULT_MAX_DIM};
use falab::{Algebra, FusionRing, Hopf, Representation};
use serde_json::Value;
use thiserror::Error;

use crate::doc::InputDigest;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: line {line}, column {column}: {message}")]
    Json { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {source}")]
    Input { path: String, source: falab::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn input(path: &str, source: falab::Error) -> CliError {
        CliError::Input { path: path.to_string(), source }
    }
}

/// What a JSON description file contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Hopf,
    Module,
    Fusion,
}

impl Kind {
    pub fn of(v: &Value) -> Kind {
        if v.get("N").is_some() || v.get("fusion").is_some() {
            Kind::Fusion
        } else if v.get("matrices").is_some() {
            Kind::Module
        } else if v.get("comul").is_some() {
            Kind::Hopf
        } else {
            Kind::Algebra
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Hopf => "hopf",
            Kind::Module => "module",
            Kind::Fusion => "fusion",
        }
    }
}

/// An algebra file, its Hopf structure if it has one, and the raw JSON.
pub type Loaded = (Arc<Algebra>, Option<Arc<Hopf>>, Value);

/// Records every file read so reports can carry their digests.
pub struct Loader {
    pub max_dim: usize,
    pub inputs: Vec<InputDigest>,
}

impl Loader {
    /// Reads the dimension cap from `FALAB_MAX_DIM`.
    pub fn from_env() -> Result<Loader, CliError> {
        let max_dim = match std::env::var("FALAB_MAX_DIM") {
            Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("FALAB_MAX_DIM: expected a positive integer, got {s:?}")))?,
            Err(_) => DEFAULT_MAX_DIM,
        };
        Ok(Loader { max_dim, inputs: Vec::new() })
    }

    /// `-` reads standard input.
    pub fn read(&mut self, path: &Path) -> Result<Value, CliError> {
        let name = path.display().to_string();
        let bytes = if name == "-" {
            let mut buf = Vec::new();
            std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf).map_err(|e| CliError::Io { path: name.clone(), message: e.to_string() })?;
            buf
        } else {
            std::fs::read(path).map_err(|e| CliError::Io { path: name.clone(), message: e.to_string() })?
        };
        self.inputs.push(InputDigest::of(name.clone(), &bytes));
        serde_json::from_slice(&bytes).map_err(|e| CliError::Json { path: name, line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn algebra(&mut self, path: &Path) -> Result<Loaded, CliError> {
        let v = self.read(path)?;
        let name = path.display().to_string();
        if Kind::of(&v) == Kind::Hopf {
            let h = hopf_from_json(&v, self.max_dim).map_err(|e| CliError::input(&name, e))?;
            return Ok((Arc::clone(h.algebra()), Some(h), v));
        }
        let a = algebra_from_json(&v, self.max_dim).map_err(|e| CliError::input(&name, e))?;
        Ok((a, None, v))
    }

    pub fn hopf(&mut self, path: &Path) -> Result<(Arc<Hopf>, Value), CliError> {
        let v = self.read(path)?;
        let h = hopf_from_json(&v, self.max_dim).map_err(|e| CliError::input(&path.display().to_string(), e))?;
        Ok((h, v))
    }

    /// Accepts a fusion file or a `g0 build` report carrying one.
    pub fn fusion(&mut self, path: &Path) -> Result<FusionRing, CliError> {
        let v = self.read(path)?;
        let name = path.display().to_string();
        let inner = v.get("facts").and_then(|f| f.get("fusion")).or_else(|| v.get("fusion")).unwrap_or(&v);
        fusion_from_json(inner).map_err(|e| CliError::input(&name, e))
    }

    /// The algebra a standalone module file points at: a path relative to
    /// the module file, or an inline description.
    pub fn module_parent(&mut self, module: &Value, module_path: &Path) -> Result<Arc<Algebra>, CliError> {
        let name = module_path.display().to_string();
        match module.get("algebra") {
            Some(Value::String(p)) => {
                let base = module_path.parent().map(Path::to_path_buf).unwrap_or_default();
                let full: PathBuf = base.join(p);
                Ok(self.algebra(&full)?.0)
            }
            Some(inline @ Value::Object(_)) => {
                if Kind::of(inline) == Kind::Hopf {
                    Ok(Arc::clone(hopf_from_json(inline, self.max_dim).map_err(|e| CliError::input(&name, e))?.algebra()))
                } else {
                    algebra_from_json(inline, self.max_dim).map_err(|e| CliError::input(&name, e))
                }
            }
            _ => Err(CliError::input(&name, falab::Error::Format("$: missing \"algebra\"".into()))),
        }
    }
}

/// Modules inside `v`: either one module object or a `modules` array.
/// Returns `(label, module)` pairs.
pub fn modules_in(v: &Value, algebra: &Arc<Algebra>, path: &str) -> Result<Vec<(Option<String>, Representation)>, CliError> {
    let one = |m: &Value, loc: &str| -> Result<(Option<String>, Representation), CliError> {
        let rep = module_from_json(m, algebra, loc).map_err(|e| CliError::input(path, e))?;
        Ok((m.get("label").and_then(Value::as_str).map(String::from), rep))
    };
    match v.get("modules") {
        Some(Value::Array(ms)) => ms.iter().enumerate().map(|(i, m)| one(m, &format!("$.modules[{i}]"))).collect(),
        Some(_) => Err(CliError::input(path, falab::Error::Format("$.modules: expected an array".into()))),
        None => Ok(vec![one(v, "$")?]),
    }
}

/// Parses `--lambda`: comma-separated scalars, or a JSON array (needed for
/// cyclotomic coefficient lists).
pub fn parse_lambda(text: &str, field: &falab::Field, dim: usize) -> Result<Vec<falab::Scalar>, CliError> {
    let bad = |m: String| CliError::Usage(format!("--lambda: {m}"));
    let t = text.trim();
    let values: Vec<falab::Scalar> = if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| bad(e.to_string()))?;
        let a = v.as_array().ok_or_else(|| bad("expected an array".into()))?;
        a.iter()
            .enumerate()
            .map(|(i, x)| field.scalar_from_json(x).map_err(|e| bad(format!("entry {i}: {e}"))))
            .collect::<Result<_, _>>()?
    } else {
        t.split(',')
            .enumerate()
            .map(|(i, x)| field.parse_scalar(x).map_err(|e| bad(format!("entry {i}: {e}"))))
            .collect::<Result<_, _>>()?
    };
    if values.len() != dim {
        return Err(bad(format!("expected {dim} values, found {}", values.len())));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use falab::Field;

    #[test]
    fn lambda_forms() {
        let q = Field::rationals();
        assert_eq!(parse_lambda("1, 0, -1/2", &q, 3).unwrap()[2], q.parse_scalar("-1/2").unwrap());
        assert!(parse_lambda("1,2", &q, 3).unwrap_err().to_string().contains("expected 3"));
        let c = Field::cyclotomic(4).unwrap();
        let l = parse_lambda("[[0,1], \"1\"]", &c, 2).unwrap();
        assert_eq!(l[0], c.zeta());
    }

    #[test]
    fn kinds() {
        assert_eq!(Kind::of(&serde_json::json!({"N": []})), Kind::Fusion);
        assert_eq!(Kind::of(&serde_json::json!({"comul": []})), Kind::Hopf);
        assert_eq!(Kind::of(&serde_json::json!({"matrices": []})), Kind::Module);
        assert_eq!(Kind::of(&serde_json::json!({"mul": []})), Kind::Algebra);
    }
}
