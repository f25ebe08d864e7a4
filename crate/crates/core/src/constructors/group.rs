//! Permutation groups, group Hopf algebras and their duals.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::hopf::{Hopf, IntegralPair};
use crate::math::{Field, Matrix, Scalar};
use crate::rep::Representation;

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// A finite group by multiplication table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    /// Permutation realizing each element, when built from permutations.
    perms: Vec<Vec<usize>>,
    generators: Vec<usize>,
}

impl GroupTable {
    /// Validates a multiplication table with identity at index 0.
    pub fn from_table(mul: Vec<Vec<usize>>, labels: Vec<String>) -> Result<GroupTable> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        for row in &mul {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroup("table is not n x n over 0..n".into()));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup("table is not a Latin square".into()));
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &mul {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return Err(Error::InvalidGroup("table is not a Latin square".into()));
                }
            }
        }
        if (0..n).any(|a| mul[0][a] != a || mul[a][0] != a) {
            return Err(Error::InvalidGroup("element 0 is not the identity".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| mul[a][b] == 0).expect("Latin square")).collect();
        let labels = if labels.is_empty() { (0..n).map(|i| format!("g{i}")).collect() } else { labels };
        if labels.len() != n {
            return Err(Error::InvalidGroup(format!("{} labels for order {n}", labels.len())));
        }
        Ok(GroupTable { mul, inverse, labels, perms: Vec::new(), generators: Vec::new() })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Permutations of the elements (empty for abstract tables).
    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// `|C_G(a)|` by direct count.
    pub fn centralizer_order(&self, a: usize) -> usize {
        (0..self.order()).filter(|&b| self.mul[a][b] == self.mul[b][a]).count()
    }

    /// Conjugacy classes ordered by their first element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.mul[self.mul[g][a]][self.inverse[g]]).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                class_of[c] = classes.len();
            }
            classes.push(class);
        }
        classes
    }

    /// Extends generator matrices to every element along the table.
    /// Only meaningful when the group was built from these generators.
    pub fn representation_matrices(&self, field: &Field, generator_matrices: &[Matrix]) -> Result<Vec<Matrix>> {
        if generator_matrices.len() != self.generators.len() || generator_matrices.is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "{} generator matrices for {} generators",
                generator_matrices.len(),
                self.generators.len()
            )));
        }
        let d = generator_matrices[0].rows();
        let mut out: Vec<Option<Matrix>> = vec![None; self.order()];
        out[0] = Some(Matrix::identity(field, d));
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            head += 1;
            for (s, m) in self.generators.iter().zip(generator_matrices) {
                let t = self.mul[e][*s];
                if out[t].is_none() {
                    out[t] = Some(out[e].as_ref().expect("visited").try_mul(m)?);
                    queue.push(t);
                }
            }
        }
        out.into_iter()
            .map(|m| m.ok_or_else(|| Error::InvalidGroup("generators do not generate the table".into())))
            .collect()
    }
}

/// Parses `(1 2)(3 4 5)` style cycle notation (1-based) on `degree` points.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let bad = || Error::InvalidGroup(format!("bad cycle notation {text:?}"));
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_end = rest.find(')').ok_or_else(bad)?;
        let inner = rest.strip_prefix('(').ok_or_else(bad)?;
        let cycle: Vec<usize> = inner[..inner_end - 1]
            .split([' ', ','])
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().ok().filter(|&x| x >= 1 && x <= degree).map(|x| x - 1).ok_or_else(bad))
            .collect::<Result<_>>()?;
        // cycles compose right to left like the group law
        let mut step: Vec<usize> = (0..degree).collect();
        for (k, &a) in cycle.iter().enumerate() {
            step[a] = cycle[(k + 1) % cycle.len()];
        }
        perm = (0..degree).map(|x| perm[step[x]]).collect();
        rest = rest[inner_end + 1..].trim_start();
    }
    let mut seen = vec![false; degree];
    for &x in &perm {
        if std::mem::replace(&mut seen[x], true) {
            return Err(bad());
        }
    }
    Ok(perm)
}

/// 1-based cycle notation; the identity is `()`.
pub fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = perm[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn group_from_generators(perms: &[Vec<usize>]) -> Result<GroupTable> {
    group_from_generators_bounded(perms, DEFAULT_CLOSURE_BOUND)
}

/// Breadth-first closure under `(gh)(x) = g(h(x))`; elements appear in
/// discovery order with the identity first.
pub fn group_from_generators_bounded(perms: &[Vec<usize>], bound: usize) -> Result<GroupTable> {
    let degree = perms.first().map_or(0, Vec::len);
    for p in perms {
        if p.len() != degree {
            return Err(Error::InvalidGroup("permutations on different sets".into()));
        }
        let mut seen = vec![false; degree];
        for &x in p {
            if x >= degree || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGroup(format!("{p:?} is not a permutation")));
            }
        }
    }
    let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&x| g[x]).collect() };
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        let e = elements[head].clone();
        head += 1;
        for s in perms {
            let t = compose(&e, s);
            if !index.contains_key(&t) {
                if elements.len() >= bound {
                    return Err(Error::ClosureBound(bound));
                }
                index.insert(t.clone(), elements.len());
                elements.push(t);
            }
        }
    }
    let mul = elements.iter().map(|g| elements.iter().map(|h| index[&compose(g, h)]).collect()).collect();
    let labels = elements.iter().map(|p| cycle_label(p)).collect();
    let mut table = GroupTable::from_table(mul, labels)?;
    table.generators = perms.iter().map(|p| index[p]).collect();
    table.perms = elements;
    Ok(table)
}

/// Symmetric group on `n` points from a transposition and an `n`-cycle.
pub fn symmetric_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidGroup("S_0".into()));
    }
    if n == 1 {
        return group_from_generators(&[vec![0]]);
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    if n == 2 {
        return group_from_generators(&[t]);
    }
    group_from_generators(&[t, c])
}

/// `C_n` generated by an `n`-cycle; element `k` is `s^k`.
pub fn cyclic_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidGroup("C_0".into()));
    }
    group_from_generators(&[(0..n).map(|i| (i + 1) % n).collect()])
}

/// The group algebra `kG` with `Delta g = g (x) g`, `eps(g) = 1`,
/// `S(g) = g^-1`, and its canonical integral pair.
#[derive(Clone, Debug)]
pub struct GroupHopf {
    pub table: GroupTable,
    pub hopf: Arc<Hopf>,
    /// `Lambda = sum_g g`, `lambda` the coefficient of the identity.
    pub pair: IntegralPair,
}

pub fn group_hopf(table: &GroupTable, field: &Field) -> Result<GroupHopf> {
    let n = table.order();
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push((a, b, table.mul(a, b), field.one()));
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let algebra = Algebra::from_triples(field, n, table.labels().to_vec(), unit.clone(), mul)?;
    let comul = (0..n).map(|g| (g, g, g, field.one())).collect();
    let mut antipode = Matrix::zeros(field, n, n);
    for g in 0..n {
        antipode.set(table.inverse(g), g, field.one());
    }
    let hopf = Hopf::new(&algebra, comul, vec![field.one(); n], antipode)?;
    let right = algebra.element(vec![field.one(); n])?;
    Ok(GroupHopf { table: table.clone(), hopf, pair: IntegralPair { right, lambda: unit } })
}

/// `(kG)*` on the evaluation basis, with its group-like elements.
#[derive(Clone, Debug)]
pub struct DualGroupHopf {
    pub table: GroupTable,
    pub hopf: Arc<Hopf>,
    /// The linear characters of `G` with values in the field.
    pub group_likes: Vec<Element>,
}

impl DualGroupHopf {
    /// The one-dimensional modules `f -> f(g)`, one per group element.
    pub fn point_modules(&self) -> Result<Vec<Representation>> {
        let f = self.hopf.field();
        let n = self.table.order();
        (0..n)
            .map(|g| {
                let mats = (0..n).map(|h| Matrix::identity(f, 1).scale(&if g == h { f.one() } else { f.zero() })).collect();
                Representation::new(self.hopf.algebra(), mats)
            })
            .collect()
    }
}

pub fn dual_group_hopf(table: &GroupTable, field: &Field) -> Result<DualGroupHopf> {
    let gh = group_hopf(table, field)?;
    let hopf = gh.hopf.dual()?;
    let mut group_likes = Vec::new();
    for chi in linear_characters(table, field)? {
        let g = hopf.algebra().element(chi)?;
        if !hopf.is_group_like(&g) {
            return Err(Error::Corruption("linear character is not group-like".into()));
        }
        group_likes.push(g);
    }
    Ok(DualGroupHopf { table: table.clone(), hopf, group_likes })
}

/// Order of the group of roots of unity available for character values.
fn root_group_order(field: &Field) -> u64 {
    match field {
        Field::Rationals => 2,
        Field::Prime(p) => p - 1,
        Field::Cyclotomic(c) => u64::from(c.order()).lcm(&2),
    }
}

/// Homomorphisms `G -> k^x`, by assigning roots of unity to generators
/// and keeping the consistent assignments.
pub fn linear_characters(table: &GroupTable, field: &Field) -> Result<Vec<Vec<Scalar>>> {
    let gens = if table.generators().is_empty() { (1..table.order()).collect() } else { table.generators().to_vec() };
    let big_n = root_group_order(field);
    let choices: Vec<Vec<Scalar>> = gens
        .iter()
        .map(|&s| {
            let m = (table.element_order(s) as u64).gcd(&big_n) as u32;
            let w = field.primitive_root_of_unity(m).expect("m divides the root group order");
            (0..m).map(|k| w.pow(k)).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; gens.len()];
    loop {
        if let Some(chi) = extend_character(table, field, &gens, &pick, &choices) {
            out.push(chi);
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return Ok(out);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn extend_character(table: &GroupTable, field: &Field, gens: &[usize], pick: &[usize], choices: &[Vec<Scalar>]) -> Option<Vec<Scalar>> {
    let n = table.order();
    let mut chi: Vec<Option<Scalar>> = vec![None; n];
    chi[0] = Some(field.one());
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let e = queue[head];
        head += 1;
        for (k, &s) in gens.iter().enumerate() {
            let t = table.mul(e, s);
            if chi[t].is_none() {
                chi[t] = Some(chi[e].as_ref().expect("visited") * &choices[k][pick[k]]);
                queue.push(t);
            }
        }
    }
    let chi: Vec<Scalar> = chi.into_iter().collect::<Option<_>>()?;
    let hom = (0..n).all(|a| (0..n).all(|b| chi[table.mul(a, b)] == &chi[a] * &chi[b]));
    hom.then_some(chi)
}
