//! Frobenius structures `beta(a, b) = lambda(ab)`: dual bases, the Nakayama
//! automorphism, the Casimir operator and Higman's separability test,
//! augmentations and integrals.

use std::sync::Arc;

use crate::algebra::{same_parent, Algebra, Element};
use crate::error::{Error, Result};
use crate::math::{kernel_basis, solve_linear, Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    algebra: Arc<Algebra>,
    lambda: Vec<Scalar>,
    gram: Matrix,
    gram_inv: Matrix,
    y: Vec<Element>,
    symmetric: bool,
    nakayama: Matrix,
}

impl FrobeniusStructure {
    /// Builds the structure for the functional `lambda` (values on the basis).
    pub fn new(algebra: &Arc<Algebra>, lambda: Vec<Scalar>) -> Result<FrobeniusStructure> {
        let n = algebra.dim();
        let f = algebra.field();
        if lambda.len() != n {
            return Err(Error::ShapeMismatch(format!("functional of length {} in dimension {n}", lambda.len())));
        }
        if let Some(s) = lambda.iter().find(|s| s.field() != f) {
            return Err(Error::FieldMismatch(f.to_string(), s.field().to_string()));
        }
        let mut gram = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = f.zero();
                for (k, c) in algebra.product_terms(i, j) {
                    acc.add_mul(c, &lambda[*k]);
                }
                gram.set(i, j, acc);
            }
        }
        let Some(gram_inv) = gram.inverse() else {
            let witness = kernel_basis(&gram).into_iter().next().unwrap_or_default();
            return Err(Error::SingularForm { witness: witness.iter().map(ToString::to_string).collect() });
        };
        let y = (0..n).map(|i| algebra.element(gram_inv.column(i)).expect("column length is dim")).collect();
        let nakayama = &gram_inv * &gram.transpose();
        let symmetric = gram.is_symmetric();
        Ok(FrobeniusStructure { algebra: Arc::clone(algebra), lambda, gram, gram_inv, y, symmetric, nakayama })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix {
        &self.gram_inv
    }

    /// `x_i = e_i`.
    pub fn x(&self, i: usize) -> Element {
        self.algebra.basis_element(i)
    }

    /// `y_i`, column `i` of the inverse Gram matrix.
    pub fn y(&self, i: usize) -> &Element {
        &self.y[i]
    }

    pub fn dual_basis(&self) -> &[Element] {
        &self.y
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Matrix of the Nakayama automorphism: `lambda(ab) = lambda(b alpha(a))`.
    pub fn nakayama(&self) -> &Matrix {
        &self.nakayama
    }

    /// `beta(a, b) = lambda(ab)`.
    pub fn beta(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let ab = self.gram.mul_vec(b);
        let mut acc = self.algebra.field().zero();
        for (x, y) in a.iter().zip(&ab) {
            acc.add_mul(x, y);
        }
        acc
    }

    /// Checks `a = sum_i beta(a, y_i) x_i` and `b = sum_i beta(x_i, b) y_i`
    /// on every basis vector; returns the first failing index.
    pub fn check_dual_bases(&self) -> std::result::Result<(), usize> {
        let n = self.algebra.dim();
        let f = self.algebra.field();
        for a in 0..n {
            let ea = self.algebra.basis_element(a);
            let mut rebuilt = vec![f.zero(); n];
            let mut mirror = self.algebra.zero_element();
            for i in 0..n {
                rebuilt[i] = self.beta(ea.coeffs(), self.y[i].coeffs());
                let coeff = self.beta(self.x(i).coeffs(), ea.coeffs());
                mirror = &mirror + &self.y[i].scale(&coeff);
            }
            if rebuilt != ea.coeffs() || mirror != ea {
                return Err(a);
            }
        }
        Ok(())
    }

    /// True iff the Nakayama matrix is multiplicative on basis products.
    pub fn nakayama_is_automorphism(&self) -> bool {
        let n = self.algebra.dim();
        let alpha = |v: &[Scalar]| self.nakayama.mul_vec(v);
        (0..n).all(|i| {
            let ai = alpha(self.algebra.basis_element(i).coeffs());
            (0..n).all(|j| {
                let aj = alpha(self.algebra.basis_element(j).coeffs());
                let prod = self.algebra.mul_coeffs(self.algebra.basis_element(i).coeffs(), self.algebra.basis_element(j).coeffs());
                alpha(&prod) == self.algebra.mul_coeffs(&ai, &aj)
            })
        })
    }

    fn casimir_raw(&self, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.algebra.dim();
        let mut acc = vec![self.algebra.field().zero(); n];
        for i in 0..n {
            let mut ya = self.algebra.mul_coeffs(self.y[i].coeffs(), a);
            ya = self.algebra.mul_coeffs(&ya, self.x(i).coeffs());
            acc.iter_mut().zip(&ya).for_each(|(s, t)| *s = &*s + t);
        }
        acc
    }

    fn casimir_mirror(&self, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.algebra.dim();
        let mut acc = vec![self.algebra.field().zero(); n];
        for i in 0..n {
            let xa = self.algebra.mul_coeffs(self.x(i).coeffs(), a);
            let xay = self.algebra.mul_coeffs(&xa, self.y[i].coeffs());
            acc.iter_mut().zip(&xay).for_each(|(s, t)| *s = &*s + t);
        }
        acc
    }

    /// The Casimir operator `c(a) = sum_i y_i a x_i`, checked to be central
    /// (and, for symmetric forms, equal to `sum_i x_i a y_i`).
    pub fn casimir_apply(&self, a: &Element) -> Result<Element> {
        if !same_parent(a.algebra(), &self.algebra) {
            return Err(Error::PreconditionFailed("element of a different algebra".into()));
        }
        let c = self.algebra.element(self.casimir_raw(a.coeffs()))?;
        if !c.is_central() {
            return Err(Error::Corruption("Casimir image is not central".into()));
        }
        if self.symmetric && self.casimir_mirror(a.coeffs()) != c.coeffs() {
            return Err(Error::Corruption("Casimir operator depends on dual-basis order".into()));
        }
        Ok(c)
    }

    /// `z = sum_i x_i y_i`.
    pub fn casimir_element(&self) -> Element {
        let n = self.algebra.dim();
        let mut z = self.algebra.zero_element();
        for i in 0..n {
            z = &z + &(&self.x(i) * &self.y[i]);
        }
        z
    }

    /// Matrix of the Casimir operator; column `j` is `c(e_j)`.
    pub fn casimir_matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.casimir_raw(self.x(j).coeffs())).collect();
        Matrix::from_columns(self.algebra.field(), n, &cols).expect("square")
    }

    /// Basis of the Casimir ideal `c(A)`.
    pub fn casimir_ideal_basis(&self) -> Vec<Element> {
        self.casimir_matrix()
            .column_space_basis()
            .into_iter()
            .map(|v| self.algebra.element(v).expect("length dim"))
            .collect()
    }

    /// Higman's criterion: separable iff `1 = c(a)` has a solution.
    pub fn is_separable(&self) -> Separability {
        let sol = solve_linear(&self.casimir_matrix(), self.algebra.unit_coefficients()).expect("shapes agree");
        let witness = sol.map(|v| self.algebra.element(v).expect("length dim"));
        Separability { separable: witness.is_some(), witness }
    }

    /// The unit `u` with `gamma(a, b) = beta(a, b u)` where `gamma` is the
    /// form of `other`.
    pub fn change_of_form_unit(&self, other: &FrobeniusStructure) -> Result<Element> {
        if !same_parent(&self.algebra, &other.algebra) {
            return Err(Error::PreconditionFailed("forms live on different algebras".into()));
        }
        // lambda_gamma(x) = lambda_beta(x u), i.e. G_beta u = lambda_gamma
        let u = self.algebra.element(self.gram_inv.mul_vec(&other.lambda))?;
        if u.inverse().is_none() {
            return Err(Error::Corruption("change-of-form element is not a unit".into()));
        }
        if self.symmetric && other.symmetric && !u.is_central() {
            return Err(Error::Corruption("change-of-form unit between symmetric forms is not central".into()));
        }
        Ok(u)
    }

    /// Integral data for an augmentation `eps`.
    pub fn augmentation(&self, eps: &[Scalar]) -> Result<AugmentationData> {
        let a = &self.algebra;
        let n = a.dim();
        check_augmentation(a, eps)?;
        let mut right = a.zero_element();
        let mut left = a.zero_element();
        for i in 0..n {
            right = &right + &self.x(i).scale(&self.y[i].eval(eps));
            left = &left + &self.y[i].scale(&eps[i]);
        }
        // the right integrals form the kernel of the stacked R(e_i) - eps_i
        let space = integral_space(a, eps, Side::Right);
        if space.len() != 1 {
            return Err(Error::IntegralSpaceNotLine(space.len()));
        }
        for i in 0..n {
            let ei = a.basis_element(i);
            if &right * &ei != right.scale(&eps[i]) {
                return Err(Error::Corruption(format!("right integral fails at e{i}")));
            }
            if &ei * &left != left.scale(&eps[i]) {
                return Err(Error::Corruption(format!("left integral fails at e{i}")));
            }
        }
        let dim_eps = right.eval(eps);
        if dim_eps != self.casimir_element().eval(eps) {
            return Err(Error::Corruption("eps(Lambda) differs from eps(z)".into()));
        }
        Ok(AugmentationData { eps: eps.to_vec(), right_integral: right, left_integral: left, dim_eps })
    }
}

#[derive(Clone, Debug)]
pub struct Separability {
    pub separable: bool,
    /// Some `a` with `c(a) = 1`.
    pub witness: Option<Element>,
}

#[derive(Clone, Debug)]
pub struct AugmentationData {
    pub eps: Vec<Scalar>,
    pub right_integral: Element,
    pub left_integral: Element,
    /// `eps(Lambda)`, which equals `eps(z)`.
    pub dim_eps: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Checks that `eps` is a unital algebra homomorphism to the field.
pub fn check_augmentation(a: &Arc<Algebra>, eps: &[Scalar]) -> Result<()> {
    let n = a.dim();
    if eps.len() != n {
        return Err(Error::ShapeMismatch(format!("augmentation of length {} in dimension {n}", eps.len())));
    }
    if !a.unit().eval(eps).is_one() {
        return Err(Error::PreconditionFailed("augmentation does not send 1 to 1".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let mut v = a.field().zero();
            for (k, c) in a.product_terms(i, j) {
                v.add_mul(c, &eps[*k]);
            }
            if v != &eps[i] * &eps[j] {
                return Err(Error::NotAHomomorphism(i, j));
            }
        }
    }
    Ok(())
}

/// Basis of `{t : t e_i = eps_i t}` (right) or `{t : e_i t = eps_i t}` (left).
pub fn integral_space(a: &Arc<Algebra>, eps: &[Scalar], side: Side) -> Vec<Element> {
    let n = a.dim();
    let f = a.field();
    let blocks: Vec<Matrix> = (0..n)
        .map(|i| {
            let e = a.basis_element(i);
            let m = match side {
                Side::Right => e.right_regular_matrix(),
                Side::Left => e.left_regular_matrix(),
            };
            m.sub(&Matrix::identity(f, n).scale(&eps[i]))
        })
        .collect();
    kernel_basis(&Matrix::vstack(f, n, &blocks)).into_iter().map(|v| a.element(v).expect("length dim")).collect()
}
