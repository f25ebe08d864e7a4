//! Complete sets of irreducible representations for small groups.

use crate::error::{Error, Result};
use crate::math::{Field, Matrix};
use crate::rep::{hom_space, Representation, WeakForm};

use super::group::{cyclic_group, group_hopf, symmetric_group, GroupHopf};

/// Irreducible representations of a group algebra with integral data.
#[derive(Clone, Debug)]
pub struct IrreducibleBundle {
    pub name: String,
    pub group: GroupHopf,
    pub labels: Vec<String>,
    pub irreducibles: Vec<Representation>,
    /// Which irreducibles have central character in the dual; all of them
    /// for group algebras.
    pub central_in_dual: Vec<bool>,
    pub weak_form: WeakForm,
}

impl IrreducibleBundle {
    pub fn dims(&self) -> Vec<usize> {
        self.irreducibles.iter().map(Representation::dim).collect()
    }
}

/// `S3`, `S4` or `C<n>` (e.g. `C4`).
pub fn irreducible_bundle(name: &str, field: &Field) -> Result<IrreducibleBundle> {
    match name {
        "S3" => symmetric_bundle(3, field),
        "S4" => symmetric_bundle(4, field),
        _ => match name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => cyclic_bundle(n, field),
            _ => Err(Error::InvalidGroup(format!("unknown bundle {name:?}; expected S3, S4 or C<n>"))),
        },
    }
}

fn sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut s = 1;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Standard representation on `b_i = e_i - e_{n-1}`.
fn standard_matrix(field: &Field, perm: &[usize]) -> Matrix {
    let n = perm.len();
    let last = n - 1;
    let mut m = Matrix::zeros(field, last, last);
    for i in 0..last {
        if perm[i] != last {
            m.set(perm[i], i, field.one());
        }
        if perm[last] != last {
            let r = perm[last];
            m.set(r, i, m.get(r, i) - &field.one());
        }
    }
    m
}

/// Action of `S4` on the three pair partitions `{01|23, 02|13, 03|12}`.
fn partition_action(perm: &[usize]) -> Vec<usize> {
    let partitions = [[0usize, 1], [0, 2], [0, 3]];
    let class_of = |a: usize, b: usize| -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if a == 0 {
            b - 1
        } else {
            // {a, b} with 0 not in it is the complement of {0, 6 - a - b}
            6 - a - b - 1
        }
    };
    partitions.iter().map(|p| class_of(perm[p[0]], perm[p[1]])).collect()
}

fn symmetric_bundle(n: usize, field: &Field) -> Result<IrreducibleBundle> {
    let table = symmetric_group(n)?;
    check_characteristic(field, table.order())?;
    let group = group_hopf(&table, field)?;
    let perms = table.permutations();
    let each = |f: &dyn Fn(&[usize]) -> Matrix| -> Vec<Matrix> { perms.iter().map(|p| f(p)).collect() };
    let trivial = each(&|_| Matrix::identity(field, 1));
    let sgn = each(&|p| Matrix::from_ints(field, &[&[sign(p)]]));
    let standard = each(&|p| standard_matrix(field, p));
    let (labels, sets): (Vec<&str>, Vec<Vec<Matrix>>) = if n == 3 {
        (vec!["triv", "sgn", "V2"], vec![trivial, sgn, standard])
    } else {
        let two = each(&|p| standard_matrix(field, &partition_action(p)));
        let twisted = each(&|p| standard_matrix(field, p).scale(&field.from_int(sign(p))));
        (vec!["triv", "sgn", "V2", "V3", "V3sgn"], vec![trivial, sgn, two, standard, twisted])
    };
    finish(format!("S{n}"), group, labels.into_iter().map(String::from).collect(), sets)
}

fn cyclic_bundle(n: usize, field: &Field) -> Result<IrreducibleBundle> {
    let table = cyclic_group(n)?;
    check_characteristic(field, n)?;
    let zeta = field
        .primitive_root_of_unity(n as u32)
        .ok_or_else(|| Error::NonSplittingField(format!("{field} has no primitive {n}-th root of unity")))?;
    let group = group_hopf(&table, field)?;
    let mut sets = Vec::with_capacity(n);
    for j in 0..n {
        let w = zeta.pow(j as u32);
        let gen = Matrix::from_rows(field, vec![vec![w]])?;
        sets.push(table.representation_matrices(field, &[gen])?);
    }
    let labels = (0..n).map(|j| format!("chi{j}")).collect();
    finish(format!("C{n}"), group, labels, sets)
}

fn check_characteristic(field: &Field, order: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && (order as u64).is_multiple_of(p) {
        return Err(Error::NonSplittingField(format!("characteristic {p} divides the group order {order}")));
    }
    Ok(())
}

fn finish(name: String, group: GroupHopf, labels: Vec<String>, sets: Vec<Vec<Matrix>>) -> Result<IrreducibleBundle> {
    let algebra = group.hopf.algebra();
    let irreducibles = sets.into_iter().map(|m| Representation::new(algebra, m)).collect::<Result<Vec<_>>>()?;
    for (i, m) in irreducibles.iter().enumerate() {
        if m.end_dim() != 1 {
            return Err(Error::NonSplittingField(format!("{} is not absolutely irreducible", labels[i])));
        }
        for other in &irreducibles[..i] {
            if !hom_space(other, m)?.is_empty() {
                return Err(Error::Corruption(format!("{} repeats an earlier irreducible", labels[i])));
            }
        }
    }
    let total: usize = irreducibles.iter().map(|m| m.dim() * m.dim()).sum();
    if total != algebra.dim() {
        return Err(Error::NotComplete { got: total.to_string(), expected: algebra.dim().to_string() });
    }
    let central_in_dual = vec![true; irreducibles.len()];
    Ok(IrreducibleBundle { name, group, labels, irreducibles, central_in_dual, weak_form: WeakForm::basis_order("ZG") })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_counts() {
        let q = Field::rationals();
        assert_eq!(irreducible_bundle("S3", &q).unwrap().dims(), vec![1, 1, 2]);
        assert_eq!(irreducible_bundle("S4", &q).unwrap().dims(), vec![1, 1, 2, 3, 3]);
        let c4 = irreducible_bundle("C4", &Field::cyclotomic(4).unwrap()).unwrap();
        assert_eq!(c4.dims(), vec![1; 4]);
    }

    #[test]
    fn splitting_failures() {
        let q = Field::rationals();
        assert!(matches!(irreducible_bundle("C3", &q), Err(Error::NonSplittingField(_))));
        assert!(matches!(irreducible_bundle("S3", &Field::prime(3).unwrap()), Err(Error::NonSplittingField(_))));
        assert!(irreducible_bundle("S3", &Field::prime(5).unwrap()).is_ok());
        assert!(irreducible_bundle("A5", &q).is_err());
    }
}
