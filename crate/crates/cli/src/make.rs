//! `make <name>`: writes built-in examples in the description file formats.

use falab::constructors::{
    cyclic_group, dual_group_hopf, group_from_generators, group_hopf, irreducible_bundle, matrix_algebra, parse_cycles, sweedler_h4,
    symmetric_group, GroupTable,
};
use falab::io::{algebra_to_json, hopf_to_json, module_to_json};
use falab::{Field, Result, Scalar};
use serde_json::{json, Value};

/// Names: `S3`, `S4`, `C<n>` (group algebra with irreducibles), `dual:<G>`
/// for `G` one of those, `group:<cycles>;<cycles>...` for a permutation
/// group algebra, `M<n>` (matrix algebra with its trace functional) and
/// `H4` (Sweedler's algebra).
pub fn make(name: &str, field: Option<&Field>) -> Result<Value> {
    if name == "H4" {
        let f = field.cloned().unwrap_or_else(Field::rationals);
        let mut v = hopf_to_json(&*sweedler_h4(&f)?);
        v["name"] = json!("H4");
        return Ok(v);
    }
    if let Some(g) = name.strip_prefix("dual:") {
        let f = field.cloned().map_or_else(|| default_field(g), Ok)?;
        let table = named_group(g)?;
        let d = dual_group_hopf(&table, &f)?;
        let mut v = hopf_to_json(&d.hopf);
        let points = d.point_modules()?;
        v["modules"] = points.iter().zip(table.labels()).map(|(m, l)| module_to_json(m, Some(&format!("ev_{l}")))).collect();
        v["central_in_dual"] = json!(vec![true; points.len()]);
        v["group_likes"] = d.group_likes.iter().map(|g| g.to_json()).collect();
        v["lambda"] = scalars(&d.hopf.frobenius_from_integrals()?.pair.lambda);
        v["name"] = json!(name);
        return Ok(v);
    }
    if let Some(gens) = name.strip_prefix("group:") {
        let f = field.cloned().unwrap_or_else(Field::rationals);
        let degree = gens.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(1);
        let perms = gens.split(';').map(|c| parse_cycles(c, degree)).collect::<Result<Vec<_>>>()?;
        let gh = group_hopf(&group_from_generators(&perms)?, &f)?;
        let mut v = hopf_to_json(&gh.hopf);
        v["lambda"] = scalars(&gh.pair.lambda);
        v["name"] = json!(name);
        return Ok(v);
    }
    if let Some(n) = name.strip_prefix('M').and_then(|n| n.parse::<usize>().ok()) {
        let f = field.cloned().unwrap_or_else(Field::rationals);
        let (a, fs) = matrix_algebra(n, &f)?;
        let mut v = algebra_to_json(&a);
        v["lambda"] = scalars(fs.lambda());
        v["name"] = json!(name);
        return Ok(v);
    }
    let f = field.cloned().map_or_else(|| default_field(name), Ok)?;
    let b = irreducible_bundle(name, &f)?;
    let mut v = hopf_to_json(&b.group.hopf);
    v["modules"] = b.irreducibles.iter().zip(&b.labels).map(|(m, l)| module_to_json(m, Some(l))).collect();
    v["central_in_dual"] = json!(b.central_in_dual);
    v["lambda"] = scalars(&b.group.pair.lambda);
    v["weak_form"] = json!(b.weak_form.description);
    let a = b.group.hopf.algebra();
    v["group_likes"] = b.group.table.conjugacy_classes().iter().map(|c| a.basis_element(c[0]).to_json()).collect();
    v["name"] = json!(name);
    Ok(v)
}

fn scalars(s: &[Scalar]) -> Value {
    s.iter().map(Scalar::to_json).collect()
}

/// `C<n>` needs `n`-th roots of unity, so it defaults to `cyclo:<n>`;
/// everything else defaults to Q.
fn default_field(group: &str) -> Result<Field> {
    match group.strip_prefix('C').and_then(|n| n.parse::<u32>().ok()) {
        Some(n) if n > 2 => Field::cyclotomic(n),
        _ => Ok(Field::rationals()),
    }
}

fn named_group(name: &str) -> Result<GroupTable> {
    match name {
        "S3" => symmetric_group(3),
        "S4" => symmetric_group(4),
        _ => match name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) => cyclic_group(n),
            None => Err(falab::Error::InvalidGroup(format!("unknown group {name:?}; expected S3, S4 or C<n>"))),
        },
    }
}
