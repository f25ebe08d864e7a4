//! JSON description files for algebras, Hopf algebras, modules and fusion
//! rings. Every error names the JSON location it came from.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::fusion::FusionRing;
use crate::hopf::{matrix_json, Hopf};
use crate::math::{Field, Matrix, Scalar};
use crate::rep::Representation;

pub const DEFAULT_MAX_DIM: usize = 200;

fn at(loc: &str, e: impl std::fmt::Display) -> Error {
    Error::Format(format!("{loc}: {e}"))
}

fn field_of<'a>(v: &'a Value, key: &str, loc: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| at(loc, format!("missing \"{key}\"")))
}

fn array<'a>(v: &'a Value, loc: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| at(loc, "expected an array"))
}

fn index(v: &Value, loc: &str) -> Result<usize> {
    v.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(|| at(loc, "expected a nonnegative integer"))
}

fn scalar(f: &Field, v: &Value, loc: &str) -> Result<Scalar> {
    f.scalar_from_json(v).map_err(|e| at(loc, e))
}

fn scalars(f: &Field, v: &Value, len: usize, loc: &str) -> Result<Vec<Scalar>> {
    let a = array(v, loc)?;
    if a.len() != len {
        return Err(at(loc, format!("expected {len} entries, found {}", a.len())));
    }
    a.iter().enumerate().map(|(i, x)| scalar(f, x, &format!("{loc}[{i}]"))).collect()
}

fn matrix(f: &Field, v: &Value, rows: usize, cols: usize, loc: &str) -> Result<Matrix> {
    let a = array(v, loc)?;
    if a.len() != rows {
        return Err(at(loc, format!("expected {rows} rows, found {}", a.len())));
    }
    let data = a.iter().enumerate().map(|(i, r)| scalars(f, r, cols, &format!("{loc}[{i}]"))).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(f, data).map_err(|e| at(loc, e))
}

fn quadruples(f: &Field, v: &Value, loc: &str) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    array(v, loc)?
        .iter()
        .enumerate()
        .map(|(t, q)| {
            let l = format!("{loc}[{t}]");
            let q = array(q, &l)?;
            if q.len() != 4 {
                return Err(at(&l, "expected [i, j, k, value]"));
            }
            Ok((index(&q[0], &l)?, index(&q[1], &l)?, index(&q[2], &l)?, scalar(f, &q[3], &format!("{l}[3]"))?))
        })
        .collect()
}

fn labels(v: &Value, loc: &str) -> Result<Vec<String>> {
    match v.get("labels") {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(l) => array(l, &format!("{loc}.labels"))?
            .iter()
            .map(|x| x.as_str().map(String::from).ok_or_else(|| at(&format!("{loc}.labels"), "labels must be strings")))
            .collect(),
    }
}

fn check_dim(dim: usize, max_dim: usize, loc: &str) -> Result<()> {
    if dim > max_dim {
        return Err(at(loc, format!("dimension {dim} exceeds the limit {max_dim}")));
    }
    Ok(())
}

pub fn algebra_from_json(v: &Value, max_dim: usize) -> Result<Arc<Algebra>> {
    let field = Field::from_json(field_of(v, "field", "$")?).map_err(|e| at("$.field", e))?;
    let dim = index(field_of(v, "dim", "$")?, "$.dim")?;
    check_dim(dim, max_dim, "$.dim")?;
    let unit = scalars(&field, field_of(v, "unit", "$")?, dim, "$.unit")?;
    let mul = quadruples(&field, field_of(v, "mul", "$")?, "$.mul")?;
    Algebra::from_triples(&field, dim, labels(v, "$")?, unit, mul)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let n = a.dim();
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.product_terms(i, j) {
                mul.push(json!([i, j, k, c.to_json()]));
            }
        }
    }
    json!({
        "field": a.field().to_json(),
        "dim": n,
        "labels": a.labels(),
        "unit": a.unit_coefficients().iter().map(Scalar::to_json).collect::<Vec<_>>(),
        "mul": mul,
    })
}

pub fn hopf_from_json(v: &Value, max_dim: usize) -> Result<Arc<Hopf>> {
    let a = algebra_from_json(v, max_dim)?;
    let f = a.field();
    let n = a.dim();
    let comul = quadruples(f, field_of(v, "comul", "$")?, "$.comul")?;
    let counit = scalars(f, field_of(v, "counit", "$")?, n, "$.counit")?;
    let antipode = matrix(f, field_of(v, "antipode", "$")?, n, n, "$.antipode")?;
    Hopf::new(&a, comul, counit, antipode)
}

pub fn hopf_to_json(h: &Hopf) -> Value {
    let mut v = algebra_to_json(h.algebra());
    let mut comul = Vec::new();
    for i in 0..h.dim() {
        for (j, k, c) in h.comul_terms(i) {
            comul.push(json!([i, j, k, c.to_json()]));
        }
    }
    v["comul"] = Value::Array(comul);
    v["counit"] = Value::Array(h.counit().iter().map(Scalar::to_json).collect());
    v["antipode"] = matrix_json(h.antipode());
    v
}

/// Reads `{dim, matrices}` against an already loaded algebra; the
/// `algebra` entry, if any, is the caller's business.
pub fn module_from_json(v: &Value, algebra: &Arc<Algebra>, loc: &str) -> Result<Representation> {
    let f = algebra.field();
    let dim = index(field_of(v, "dim", loc)?, &format!("{loc}.dim"))?;
    let mats = array(field_of(v, "matrices", loc)?, &format!("{loc}.matrices"))?;
    if mats.len() != algebra.dim() {
        return Err(at(&format!("{loc}.matrices"), format!("expected {} matrices, found {}", algebra.dim(), mats.len())));
    }
    let matrices = mats
        .iter()
        .enumerate()
        .map(|(i, m)| matrix(f, m, dim, dim, &format!("{loc}.matrices[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(algebra, matrices)
}

pub fn module_to_json(m: &Representation, label: Option<&str>) -> Value {
    let mut v = Map::new();
    if let Some(l) = label {
        v.insert("label".into(), json!(l));
    }
    v.insert("dim".into(), json!(m.dim()));
    v.insert("matrices".into(), Value::Array(m.matrices().iter().map(matrix_json).collect()));
    Value::Object(v)
}

pub fn fusion_from_json(v: &Value) -> Result<FusionRing> {
    let dims = array(field_of(v, "dims", "$")?, "$.dims")?
        .iter()
        .enumerate()
        .map(|(i, d)| d.as_u64().ok_or_else(|| at(&format!("$.dims[{i}]"), "expected a positive integer")))
        .collect::<Result<Vec<_>>>()?;
    if let Some(r) = v.get("rank") {
        if index(r, "$.rank")? != dims.len() {
            return Err(at("$.rank", "rank does not match the number of dims"));
        }
    }
    let dual = array(field_of(v, "dual", "$")?, "$.dual")?
        .iter()
        .enumerate()
        .map(|(i, d)| index(d, &format!("$.dual[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let unit = index(field_of(v, "unit", "$")?, "$.unit")?;
    let triples = array(field_of(v, "N", "$")?, "$.N")?
        .iter()
        .enumerate()
        .map(|(t, q)| {
            let l = format!("$.N[{t}]");
            let q = array(q, &l)?;
            if q.len() != 4 {
                return Err(at(&l, "expected [i, j, k, count]"));
            }
            let c = q[3].as_u64().ok_or_else(|| at(&l, "count must be a nonnegative integer"))?;
            Ok((index(&q[0], &l)?, index(&q[1], &l)?, index(&q[2], &l)?, c))
        })
        .collect::<Result<Vec<_>>>()?;
    let central = match v.get("central_in_dual") {
        None | Some(Value::Null) => None,
        Some(c) => Some(
            array(c, "$.central_in_dual")?
                .iter()
                .map(|b| b.as_bool().ok_or_else(|| at("$.central_in_dual", "expected booleans")))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    FusionRing::new(labels(v, "$")?, dims, dual, unit, triples, central)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{irreducible_bundle, sweedler_h4};

    #[test]
    fn hopf_round_trip() {
        let h = sweedler_h4(&Field::rationals()).unwrap();
        let v = hopf_to_json(&h);
        let back = hopf_from_json(&v, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(hopf_to_json(&back), v);
    }

    #[test]
    fn cyclotomic_module_round_trip() {
        let b = irreducible_bundle("C3", &Field::cyclotomic(3).unwrap()).unwrap();
        let a = b.group.hopf.algebra();
        let v = module_to_json(&b.irreducibles[1], Some("chi1"));
        let back = module_from_json(&v, a, "$").unwrap();
        assert_eq!(back.character(), b.irreducibles[1].character());
    }

    #[test]
    fn errors_carry_locations() {
        let v = json!({"field": "Q", "dim": 1, "unit": ["1"], "mul": [[0, 0, 0, "x"]]});
        let err = algebra_from_json(&v, DEFAULT_MAX_DIM).unwrap_err().to_string();
        assert!(err.contains("$.mul[0][3]"), "{err}");
        let v = json!({"field": "Q", "dim": 300, "unit": [], "mul": []});
        assert!(algebra_from_json(&v, DEFAULT_MAX_DIM).unwrap_err().to_string().contains("limit"));
        let v = json!({"field": "Q", "dim": 1, "unit": ["1"], "mul": [[0, 0, 0, "2"]]});
        assert!(matches!(algebra_from_json(&v, DEFAULT_MAX_DIM), Err(Error::Associativity { .. }) | Err(Error::UnitLaw(_))));
    }

    #[test]
    fn fusion_round_trip() {
        let v = json!({"rank": 2, "dims": [1, 1], "dual": [0, 1], "unit": 0, "N": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]});
        let fr = fusion_from_json(&v).unwrap();
        assert_eq!(fusion_from_json(&fr.to_json()).unwrap(), fr);
    }
}
