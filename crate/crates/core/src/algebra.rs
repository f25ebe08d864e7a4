//! Finite-dimensional associative unital algebras given by structure
//! constants `e_i e_j = sum_k c[i][j][k] e_k`.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::math::{kernel_basis, Field, Matrix, Scalar};

#[derive(Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    unit: Vec<Scalar>,
    /// Dense tensor, index `(i * n + j) * n + k`.
    tensor: Vec<Scalar>,
    /// Nonzero `(k, c[i][j][k])` per product `e_i e_j`, index `i * n + j`.
    products: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.unit == other.unit && self.tensor == other.tensor
    }
}

impl Algebra {
    /// Builds and validates an algebra from sparse triples `(i, j, k, c)`.
    /// Repeated triples are summed. Empty `labels` become `e0, e1, ...`.
    pub fn from_triples(
        field: &Field,
        dim: usize,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        triples: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Arc<Algebra>> {
        if dim == 0 {
            return Err(Error::ShapeMismatch("algebra dimension must be at least 1".into()));
        }
        let mut tensor = vec![field.zero(); dim * dim * dim];
        for (i, j, k, c) in triples {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            let slot = &mut tensor[(i * dim + j) * dim + k];
            *slot = &*slot + &c;
        }
        Algebra::from_dense(field, dim, labels, unit, tensor)
    }

    pub fn from_dense(
        field: &Field,
        dim: usize,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        tensor: Vec<Scalar>,
    ) -> Result<Arc<Algebra>> {
        if tensor.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!("structure tensor has {} entries, expected {}", tensor.len(), dim.pow(3))));
        }
        if unit.len() != dim {
            return Err(Error::ShapeMismatch(format!("unit has length {}, expected {dim}", unit.len())));
        }
        if let Some(s) = unit.iter().chain(&tensor).find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
        }
        let labels = if labels.is_empty() { (0..dim).map(|i| format!("e{i}")).collect() } else { labels };
        if labels.len() != dim {
            return Err(Error::ShapeMismatch(format!("{} labels for dimension {dim}", labels.len())));
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &tensor[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let algebra = Algebra { field: field.clone(), dim, labels, unit, tensor, products };
        algebra.check_unit()?;
        algebra.check_associative()?;
        Ok(Arc::new(algebra))
    }

    fn check_unit(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for (a, u) in self.unit.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (k, c) in &self.products[a * n + i] {
                    left[*k].add_mul(u, c);
                }
                for (k, c) in &self.products[i * n + a] {
                    right[*k].add_mul(u, c);
                }
            }
            for k in 0..n {
                let expected = if k == i { self.field.one() } else { self.field.zero() };
                if left[k] != expected || right[k] != expected {
                    return Err(Error::UnitLaw(i));
                }
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim;
        let mut lhs = vec![self.field.zero(); n];
        let mut rhs = vec![self.field.zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    lhs.iter_mut().chain(rhs.iter_mut()).for_each(|s| *s = self.field.zero());
                    for (m, c) in &self.products[i * n + j] {
                        for (l, d) in &self.products[m * n + k] {
                            lhs[*l].add_mul(c, d);
                        }
                    }
                    for (m, c) in &self.products[j * n + k] {
                        for (l, d) in &self.products[i * n + m] {
                            rhs[*l].add_mul(c, d);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_coefficients(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    /// Product of two coefficient vectors.
    pub fn mul_coeffs(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in &self.products[i * n + j] {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i + 1..n).all(|j| self.products[i * n + j] == self.products[j * n + i]))
    }

    pub fn unit(self: &Arc<Self>) -> Element {
        Element { algebra: Arc::clone(self), coeffs: self.unit.clone() }
    }

    pub fn zero_element(self: &Arc<Self>) -> Element {
        Element { algebra: Arc::clone(self), coeffs: vec![self.field.zero(); self.dim] }
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> Element {
        let mut e = self.zero_element();
        e.coeffs[i] = self.field.one();
        e
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Scalar>) -> Result<Element> {
        if coeffs.len() != self.dim {
            return Err(Error::ShapeMismatch(format!("element of length {} in dimension {}", coeffs.len(), self.dim)));
        }
        if let Some(s) = coeffs.iter().find(|s| s.field() != &self.field) {
            return Err(Error::FieldMismatch(self.field.to_string(), s.field().to_string()));
        }
        Ok(Element { algebra: Arc::clone(self), coeffs })
    }

    /// Matrix of `x -> a x`; column `j` holds `a e_j`.
    pub fn left_regular_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(&self.field, n, n);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.products[i * n + j] {
                    let v = m.get(*k, j) + &(ai * c);
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of `x -> x a`; column `j` holds `e_j a`.
    pub fn right_regular_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(&self.field, n, n);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.products[j * n + i] {
                    let v = m.get(*k, j) + &(ai * c);
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Basis of the center, from the kernel of the stacked commutator maps.
    pub fn center_basis(self: &Arc<Self>) -> Vec<Element> {
        let n = self.dim;
        let blocks: Vec<Matrix> = (0..n)
            .map(|i| {
                let e = self.basis_vector(i);
                self.right_regular_matrix(&e).sub(&self.left_regular_matrix(&e))
            })
            .collect();
        let system = Matrix::vstack(&self.field, n, &blocks);
        kernel_basis(&system).into_iter().map(|coeffs| Element { algebra: Arc::clone(self), coeffs }).collect()
    }

    /// The regular character as a row `chi_reg(e_i) = Tr(x -> e_i x)`.
    /// The trace of right multiplication is computed too and must agree.
    pub fn regular_character(&self) -> Result<Vec<Scalar>> {
        let n = self.dim;
        let mut chi = Vec::with_capacity(n);
        for i in 0..n {
            let mut left = self.field.zero();
            let mut right = self.field.zero();
            for j in 0..n {
                left = &left + self.structure_constant(i, j, j);
                right = &right + self.structure_constant(j, i, j);
            }
            if left != right {
                return Err(Error::Corruption(format!("left and right regular traces differ at e{i}")));
            }
            chi.push(left);
        }
        Ok(chi)
    }

    /// Basis of the trace forms, i.e. functionals `f` with `f(ab) = f(ba)`.
    pub fn trace_forms_basis(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in i + 1..n {
                let row = (0..n).map(|k| self.structure_constant(i, j, k) - self.structure_constant(j, i, k)).collect();
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return (0..n).map(|i| self.basis_vector(i)).collect();
        }
        kernel_basis(&Matrix::from_rows(&self.field, rows).expect("rows of equal length"))
    }
}

/// An element of an algebra, carrying a shared reference to its parent.
#[derive(Clone, Debug)]
pub struct Element {
    algebra: Arc<Algebra>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

impl Eq for Element {}

pub fn same_parent(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn check_parent(&self, other: &Element) -> Result<()> {
        if same_parent(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::PreconditionFailed("elements belong to different algebras".into()))
        }
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.check_parent(other)?;
        Ok(Element { algebra: Arc::clone(&self.algebra), coeffs: self.algebra.mul_coeffs(&self.coeffs, &other.coeffs) })
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element { algebra: Arc::clone(&self.algebra), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn left_regular_matrix(&self) -> Matrix {
        self.algebra.left_regular_matrix(&self.coeffs)
    }

    pub fn right_regular_matrix(&self) -> Matrix {
        self.algebra.right_regular_matrix(&self.coeffs)
    }

    /// `det` of left multiplication.
    pub fn norm(&self) -> Scalar {
        self.left_regular_matrix().det().expect("regular matrix is square")
    }

    /// Applies a linear functional given as a row of values on the basis.
    pub fn eval(&self, functional: &[Scalar]) -> Scalar {
        let mut acc = self.algebra.field.zero();
        for (c, f) in self.coeffs.iter().zip(functional) {
            acc.add_mul(c, f);
        }
        acc
    }

    pub fn is_central(&self) -> bool {
        self.left_regular_matrix() == self.right_regular_matrix()
    }

    /// Multiplicative inverse, when it exists.
    pub fn inverse(&self) -> Option<Element> {
        let x = crate::math::solve_linear(&self.left_regular_matrix(), &self.algebra.unit).ok()??;
        Some(Element { algebra: Arc::clone(&self.algebra), coeffs: x })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(Scalar::to_json).collect())
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        self.check_parent(rhs).expect("same parent algebra");
        Element { algebra: Arc::clone(&self.algebra), coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        self.check_parent(rhs).expect("same parent algebra");
        Element { algebra: Arc::clone(&self.algebra), coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        self.multiply(rhs).expect("same parent algebra")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(&self.algebra.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    /// M_2(Q) on the matrix units E11, E12, E21, E22.
    fn m2() -> Arc<Algebra> {
        let f = q();
        let mut triples = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    triples.push((i * 2 + j, j * 2 + l, i * 2 + l, f.one()));
                }
            }
        }
        let unit = vec![f.one(), f.zero(), f.zero(), f.one()];
        Algebra::from_triples(&f, 4, vec![], unit, triples).unwrap()
    }

    /// Q[g]/(g^2 - 1).
    fn qc2() -> Arc<Algebra> {
        let f = q();
        let t = vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one()), (1, 1, 0, f.one())];
        Algebra::from_triples(&f, 2, vec!["1".into(), "g".into()], vec![f.one(), f.zero()], t).unwrap()
    }

    #[test]
    fn matrix_units() {
        let a = m2();
        let e11 = a.basis_element(0);
        let e12 = a.basis_element(1);
        assert_eq!(&e11 * &e12, e12);
        assert!((&e12 * &e11).is_zero());
        assert_eq!(e11.left_regular_matrix().trace(), q().from_int(2));
        assert_eq!(a.center_basis().len(), 1);
        let chi = a.regular_character().unwrap();
        assert_eq!(chi, vec![q().from_int(2), q().zero(), q().zero(), q().from_int(2)]);
    }

    #[test]
    fn unit_is_identity() {
        let a = m2();
        assert!(a.unit().left_regular_matrix().is_identity());
        assert_eq!(a.unit().norm(), q().one());
    }

    #[test]
    fn norm_on_c2() {
        let a = qc2();
        let f = q();
        let x = a.element(vec![f.from_int(3), f.from_int(2)]).unwrap();
        assert_eq!(x.norm(), f.from_int(5));
        assert_eq!(a.center_basis().len(), 2);
        assert!(a.is_commutative());
        assert_eq!(a.unit().scale(&f.from_int(2)).norm(), f.from_int(4));
    }

    #[test]
    fn rejects_bad_data() {
        let f = q();
        // e0 e0 = e1, e1 anything = 0 but unit claimed as e0
        let t = vec![(0, 0, 1, f.one())];
        let err = Algebra::from_triples(&f, 2, vec![], vec![f.one(), f.zero()], t).unwrap_err();
        assert_eq!(err, Error::UnitLaw(0));
        let err = Algebra::from_triples(&f, 1, vec![], vec![f.one()], vec![(0, 0, 3, f.one())]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 3, dim: 1 });
    }

    #[test]
    fn detects_nonassociative_triple() {
        // Q x Q with a perturbed product e1 e1 = e0 + e1 breaks associativity
        let f = q();
        let t = vec![(0, 0, 0, f.one()), (1, 1, 1, f.one()), (1, 1, 0, f.one())];
        let err = Algebra::from_triples(&f, 2, vec![], vec![f.one(), f.one()], t).unwrap_err();
        assert!(matches!(err, Error::UnitLaw(_) | Error::Associativity { .. }));
    }

    #[test]
    fn elements_of_other_algebras_do_not_mix() {
        let a = m2();
        let b = qc2();
        assert!(a.unit().multiply(&b.unit()).is_err());
        assert!(a.element(vec![q().one()]).is_err());
    }

    #[test]
    fn trace_forms_of_m2() {
        assert_eq!(m2().trace_forms_basis().len(), 1);
        assert_eq!(qc2().trace_forms_basis().len(), 2);
    }
}
