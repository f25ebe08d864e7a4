//! Hopf algebras by structure data: axioms, the dual, integrals, the
//! Frobenius form of an integral pair, separability and symmetry checks,
//! tensor and dual modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{same_parent, Algebra, Element};
use crate::error::{Error, Result};
use crate::frobenius::{integral_space, FrobeniusStructure, Side};
use crate::math::{kernel_basis, Field, Matrix, Scalar};
use crate::rep::{analyze_module, Representation};
use crate::report::{Clause, Status};

type Tensor2 = BTreeMap<(usize, usize), Scalar>;
type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &value;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

#[derive(Debug)]
pub struct Hopf {
    algebra: Arc<Algebra>,
    /// Nonzero `(j, k, d[i][j][k])` of `Delta(e_i)`.
    comul: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    /// Column `j` holds `S(e_j)`.
    antipode: Matrix,
}

impl Hopf {
    /// Builds a Hopf algebra and verifies coassociativity, the counit law,
    /// the bialgebra law and the antipode law.
    pub fn new(
        algebra: &Arc<Algebra>,
        comul: Vec<(usize, usize, usize, Scalar)>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Arc<Hopf>> {
        let n = algebra.dim();
        let f = algebra.field();
        if counit.len() != n {
            return Err(Error::ShapeMismatch(format!("counit of length {} in dimension {n}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::ShapeMismatch(format!("antipode must be {n}x{n}")));
        }
        if antipode.field() != f {
            return Err(Error::FieldMismatch(f.to_string(), antipode.field().to_string()));
        }
        if let Some(s) = counit.iter().find(|s| s.field() != f) {
            return Err(Error::FieldMismatch(f.to_string(), s.field().to_string()));
        }
        let mut dense: Vec<Tensor2> = vec![Tensor2::new(); n];
        for (i, j, k, c) in comul {
            for index in [i, j, k] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, dim: n });
                }
            }
            if c.field() != f {
                return Err(Error::FieldMismatch(f.to_string(), c.field().to_string()));
            }
            accumulate(&mut dense[i], (j, k), c);
        }
        let comul = dense.into_iter().map(|t| t.into_iter().map(|((j, k), c)| (j, k, c)).collect()).collect();
        let h = Hopf { algebra: Arc::clone(algebra), comul, counit, antipode };
        h.check_counit()?;
        h.check_coassociative()?;
        h.check_bialgebra()?;
        h.check_antipode()?;
        Ok(Arc::new(h))
    }

    fn check_counit(&self) -> Result<()> {
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for (j, k, c) in &self.comul[i] {
                left[*k].add_mul(&self.counit[*j], c);
                right[*j].add_mul(&self.counit[*k], c);
            }
            let e = self.algebra.basis_element(i);
            if left != e.coeffs() || right != e.coeffs() {
                return Err(Error::Counit(i));
            }
        }
        Ok(())
    }

    fn check_coassociative(&self) -> Result<()> {
        for i in 0..self.dim() {
            let mut lhs = Tensor3::new();
            let mut rhs = Tensor3::new();
            for (j, k, c) in &self.comul[i] {
                for (a, b, d) in &self.comul[*j] {
                    accumulate(&mut lhs, (*a, *b, *k), c * d);
                }
                for (a, b, d) in &self.comul[*k] {
                    accumulate(&mut rhs, (*j, *a, *b), c * d);
                }
            }
            if lhs != rhs {
                return Err(Error::Coassociativity(i));
            }
        }
        Ok(())
    }

    fn check_bialgebra(&self) -> Result<()> {
        let n = self.dim();
        let a = &self.algebra;
        let unit = a.unit_coefficients();
        if !a.unit().eval(&self.counit).is_one() {
            return Err(Error::Bialgebra(n, n));
        }
        let mut unit_sq = Tensor2::new();
        for (j, uj) in unit.iter().enumerate() {
            for (k, uk) in unit.iter().enumerate() {
                accumulate(&mut unit_sq, (j, k), uj * uk);
            }
        }
        if self.coproduct_map(unit) != unit_sq {
            return Err(Error::Bialgebra(n, n));
        }
        for i in 0..n {
            for j in 0..n {
                let mut eps = self.field().zero();
                for (k, c) in a.product_terms(i, j) {
                    eps.add_mul(c, &self.counit[*k]);
                }
                if eps != &self.counit[i] * &self.counit[j] {
                    return Err(Error::Bialgebra(i, j));
                }
                let mut prod = Tensor2::new();
                for (p, q, c) in &self.comul[i] {
                    for (r, s, d) in &self.comul[j] {
                        let cd = c * d;
                        for (x, u) in a.product_terms(*p, *r) {
                            let cdu = &cd * u;
                            for (y, v) in a.product_terms(*q, *s) {
                                accumulate(&mut prod, (*x, *y), &cdu * v);
                            }
                        }
                    }
                }
                let mut lhs = Tensor2::new();
                for (k, c) in a.product_terms(i, j) {
                    for (p, q, d) in &self.comul[*k] {
                        accumulate(&mut lhs, (*p, *q), c * d);
                    }
                }
                if lhs != prod {
                    return Err(Error::Bialgebra(i, j));
                }
            }
        }
        Ok(())
    }

    fn check_antipode(&self) -> Result<()> {
        let n = self.dim();
        let a = &self.algebra;
        for i in 0..n {
            let mut left = vec![self.field().zero(); n];
            let mut right = vec![self.field().zero(); n];
            for (j, k, c) in &self.comul[i] {
                let sj = self.antipode.column(*j);
                let sk = self.antipode.column(*k);
                let l = a.mul_coeffs(&sj, a.basis_element(*k).coeffs());
                let r = a.mul_coeffs(a.basis_element(*j).coeffs(), &sk);
                for t in 0..n {
                    left[t].add_mul(c, &l[t]);
                    right[t].add_mul(c, &r[t]);
                }
            }
            let expected = a.unit().scale(&self.counit[i]);
            if left != expected.coeffs() || right != expected.coeffs() {
                return Err(Error::Antipode(i));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// Nonzero `(j, k, d[i][j][k])` of `Delta(e_i)`.
    pub fn comul_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul[i]
    }

    fn coproduct_map(&self, a: &[Scalar]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comul[i] {
                accumulate(&mut out, (*j, *k), ai * c);
            }
        }
        out
    }

    /// `Delta(a)` as the matrix `D` with `Delta(a) = sum D[j][k] e_j (x) e_k`.
    pub fn coproduct(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for ((j, k), c) in self.coproduct_map(a) {
            m.set(j, k, c);
        }
        m
    }

    pub fn apply_antipode(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(a)
    }

    pub fn is_involutory(&self) -> bool {
        (&self.antipode * &self.antipode).is_identity()
    }

    /// `Delta(g) = g (x) g` and `eps(g) = 1`.
    pub fn is_group_like(&self, g: &Element) -> bool {
        if !same_parent(g.algebra(), &self.algebra) || !g.eval(&self.counit).is_one() {
            return false;
        }
        let mut square = Tensor2::new();
        for (j, gj) in g.coeffs().iter().enumerate() {
            for (k, gk) in g.coeffs().iter().enumerate() {
                accumulate(&mut square, (j, k), gj * gk);
            }
        }
        self.coproduct_map(g.coeffs()) == square
    }

    /// Basis of the cocommutative elements `{a : Delta(a) = flip Delta(a)}`.
    pub fn cocommutative_basis(&self) -> Vec<Element> {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in j + 1..n {
                let row: Vec<Scalar> = (0..n)
                    .map(|i| {
                        let mut v = f.zero();
                        for (p, q, c) in &self.comul[i] {
                            if (*p, *q) == (j, k) {
                                v = &v + c;
                            } else if (*p, *q) == (k, j) {
                                v = &v - c;
                            }
                        }
                        v
                    })
                    .collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let basis = if rows.is_empty() {
            (0..n).map(|i| self.algebra.basis_element(i).into_coeffs()).collect()
        } else {
            kernel_basis(&Matrix::from_rows(f, rows).expect("equal rows"))
        };
        basis.into_iter().map(|v| self.algebra.element(v).expect("length dim")).collect()
    }

    /// The dual Hopf algebra on the dual basis `f_i`.
    pub fn dual(&self) -> Result<Arc<Hopf>> {
        let n = self.dim();
        let a = &self.algebra;
        let mut mul = Vec::new();
        for i in 0..n {
            for (j, k, c) in &self.comul[i] {
                mul.push((*j, *k, i, c.clone()));
            }
        }
        let labels = a.labels().iter().map(|l| dual_label(l)).collect();
        let dual_algebra = Algebra::from_triples(a.field(), n, labels, self.counit.clone(), mul)?;
        let mut comul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in a.product_terms(i, j) {
                    comul.push((*k, i, j, c.clone()));
                }
            }
        }
        Hopf::new(&dual_algebra, comul, a.unit_coefficients().to_vec(), self.antipode.transpose())
    }

    /// Right and left integral lines with the flags derived from them.
    pub fn integrals(&self) -> Result<Integrals> {
        let right = integral_space(&self.algebra, &self.counit, Side::Right);
        if right.len() != 1 {
            return Err(Error::IntegralSpaceNotLine(right.len()));
        }
        let left = integral_space(&self.algebra, &self.counit, Side::Left);
        if left.len() != 1 {
            return Err(Error::IntegralSpaceNotLine(left.len()));
        }
        let right = canonical(&right[0]);
        let left = canonical(&left[0]);
        let s_right = self.algebra.element(self.apply_antipode(right.coeffs()))?;
        let left_is_antipode_image = canonical(&s_right) == left;
        Ok(Integrals {
            unimodular: right == left,
            involutory: self.is_involutory(),
            antipode_invertible: self.antipode.inverse().is_some(),
            left_is_antipode_image,
            right,
            left,
        })
    }

    /// The integral pair `(Lambda, lambda)` with `<lambda, Lambda> = 1` and
    /// the form `beta(a, b) = lambda(ab)`.
    pub fn frobenius_from_integrals(&self) -> Result<HopfFrobenius> {
        let ints = self.integrals()?;
        let dual = self.dual()?;
        let space = integral_space(dual.algebra(), dual.counit(), Side::Left);
        if space.len() != 1 {
            return Err(Error::IntegralSpaceNotLine(space.len()));
        }
        let lambda_raw = space[0].coeffs().to_vec();
        let pairing = ints.right.eval(&lambda_raw);
        let scale = pairing.inv().map_err(|_| Error::Corruption("<lambda, Lambda> = 0".into()))?;
        let lambda: Vec<Scalar> = lambda_raw.iter().map(|c| c * &scale).collect();
        let frobenius = FrobeniusStructure::new(&self.algebra, lambda.clone()).map_err(|e| match e {
            Error::SingularForm { .. } => Error::Corruption("integral form is singular".into()),
            other => other,
        })?;
        let n = self.dim();
        let d = self.coproduct(ints.right.coeffs());
        // sum x_i (x) y_i = sum Lambda_2 (x) S(Lambda_1)
        let mut dual_bases_agree = true;
        for k in 0..n {
            for l in 0..n {
                let mut t = self.field().zero();
                for j in 0..n {
                    t.add_mul(d.get(j, k), self.antipode.get(l, j));
                }
                if &t != frobenius.gram_inverse().get(l, k) {
                    dual_bases_agree = false;
                }
            }
        }
        let orthogonal = self.check_orthogonality(&frobenius);
        let pair = IntegralPair { right: ints.right.clone(), lambda };
        Ok(HopfFrobenius { frobenius, pair, integrals: ints, dual, dual_bases_agree, orthogonal })
    }

    /// `beta(a, b <- f) = beta(a <- S*(f), b)` on basis triples, where
    /// `b <- f = sum <f, b_1> b_2`.
    fn check_orthogonality(&self, fs: &FrobeniusStructure) -> bool {
        let n = self.dim();
        let f = self.field();
        let harpoon = |b: &[Scalar], func: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec![f.zero(); n];
            for ((j, k), c) in self.coproduct_map(b) {
                out[k].add_mul(&c, &func[j]);
            }
            out
        };
        for m in 0..n {
            let mut fm = vec![f.zero(); n];
            fm[m] = f.one();
            let s_fm = self.antipode.transpose().mul_vec(&fm);
            for a in 0..n {
                let ea = self.algebra.basis_element(a);
                let ea_s = harpoon(ea.coeffs(), &s_fm);
                for b in 0..n {
                    let eb = self.algebra.basis_element(b);
                    let lhs = fs.beta(ea.coeffs(), &harpoon(eb.coeffs(), &fm));
                    let rhs = fs.beta(&ea_s, eb.coeffs());
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Searches for `u` invertible with `S^2(a) u = u a` for all `a`.
    pub fn antipode_square_inner(&self) -> Option<Element> {
        let n = self.dim();
        let f = self.field();
        let s2 = &self.antipode * &self.antipode;
        let blocks: Vec<Matrix> = (0..n)
            .map(|i| {
                let img = s2.column(i);
                self.algebra.left_regular_matrix(&img).sub(&self.algebra.basis_element(i).right_regular_matrix())
            })
            .collect();
        let sols = kernel_basis(&Matrix::vstack(f, n, &blocks));
        find_invertible(&self.algebra, &sols)
    }

    /// Unimodular and `S^2` inner: the Frobenius form can be chosen symmetric.
    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(self.integrals()?.unimodular && self.antipode_square_inner().is_some())
    }

    pub fn maschke_report(&self) -> Result<MaschkeReport> {
        let hf = self.frobenius_from_integrals()?;
        let ints = &hf.integrals;
        let dim_eps = ints.right.eval(&self.counit);
        let left_eps = ints.left.eval(&self.counit);
        let separable = !dim_eps.is_zero();
        let idempotent_integral = separable.then(|| ints.right.scale(&dim_eps.inv().expect("nonzero")));
        let higman = hf.frobenius.is_separable().separable;
        let casimir_one = hf.frobenius.casimir_apply(&self.algebra.unit())?;
        let mut clauses = vec![
            Clause::compare("Maschke agrees with Higman", "Higman criterion", json!(separable), json!(higman)),
            Clause::compare(
                "left and right integrals give the same ideal",
                "augmentation ideal of integrals",
                json!(dim_eps.is_zero()),
                json!(left_eps.is_zero()),
            ),
            Clause::compare(
                "Casimir of 1 is eps(Lambda)",
                "Casimir operator of a Hopf algebra",
                casimir_one.to_json(),
                self.algebra.unit().scale(&dim_eps).to_json(),
            ),
        ];
        if let Some(e) = &idempotent_integral {
            let ok = e * e == *e && e.eval(&self.counit).is_one();
            clauses.push(Clause::check("normalized integral is idempotent", "Maschke", ok, e.to_json(), Value::Null));
        }
        if ints.involutory {
            let lambda_one = self.algebra.unit().eval(&hf.pair.lambda);
            let lhs_zero = (&dim_eps * &lambda_one).is_zero();
            let rhs_zero = self.field().from_int(self.dim() as i64).is_zero();
            clauses.push(
                Clause::compare("dimension product", "involutory dimension product", json!(lhs_zero), json!(rhs_zero))
                    .with_witness(json!({"eps(Lambda)": dim_eps.to_json(), "lambda(1)": lambda_one.to_json()})),
            );
        } else {
            clauses.push(Clause::skipped("dimension product", "involutory dimension product", "antipode is not involutory"));
        }
        Ok(MaschkeReport { dim_eps, separable, idempotent_integral, clauses })
    }

    /// Symmetry predicates and the restriction checks of `b_lambda`.
    pub fn symmetry_suite(&self) -> Result<SymmetryReport> {
        let hf = self.frobenius_from_integrals()?;
        let n = self.dim();
        let f = self.field();
        let ints = &hf.integrals;
        let fs = &hf.frobenius;
        let dual = &hf.dual;
        let s2_inner = self.antipode_square_inner().is_some();
        let symmetric = ints.unimodular && s2_inner;
        let dual_ints = dual.integrals()?;
        let dual_symmetric = dual_ints.unimodular && dual.antipode_square_inner().is_some();
        let lambda_is_trace = (0..n).all(|i| (0..n).all(|j| fs.gram().get(i, j) == fs.gram().get(j, i)));
        let separable = !ints.right.eval(&self.counit).is_zero();
        let mut clauses = vec![Clause::compare(
            "lambda is a trace form iff Nakayama is trivial",
            "Nakayama automorphism",
            json!(lambda_is_trace),
            json!(fs.nakayama().is_identity()),
        )];
        // lambda's value as a trace form, dual integrals are trace forms
        let trace_forms = self.algebra.trace_forms_basis();
        let in_trace_forms = |v: &[Scalar]| {
            let mut rows: Vec<Vec<Scalar>> = trace_forms.clone();
            let r0 = rows.len();
            rows.push(v.to_vec());
            Matrix::from_rows(f, rows).expect("rows").rank() == r0
        };
        let dual_integrals_trace = in_trace_forms(dual_ints.left.coeffs()) && in_trace_forms(dual_ints.right.coeffs());
        clauses.push(Clause::compare(
            "symmetric and involutory iff unimodular with trace integrals",
            "symmetric involutory Hopf algebras",
            json!(symmetric && ints.involutory),
            json!(ints.unimodular && dual_integrals_trace),
        ));
        // r_lambda^{-1}(f) = Lambda <- S*(f)
        let b_lambda = fs.gram().transpose();
        let b_cap = self.coproduct(ints.right.coeffs()).transpose();
        let lhs = &b_cap * &self.antipode.transpose();
        let rhs = b_lambda.inverse().expect("nonsingular form");
        clauses.push(Clause::compare(
            "inverse of r_lambda",
            "integral pair inverse formula",
            matrix_json(&lhs),
            matrix_json(&rhs),
        ));
        let chi_reg = self.algebra.regular_character()?;
        if ints.involutory {
            let dim_eps = ints.right.eval(&self.counit);
            let rhs: Vec<Value> = hf.pair.lambda.iter().map(|l| (l * &dim_eps).to_json()).collect();
            clauses.push(Clause::compare(
                "regular character is eps(Lambda) lambda",
                "regular character of an involutory Hopf algebra",
                Value::Array(chi_reg.iter().map(Scalar::to_json).collect()),
                Value::Array(rhs),
            ));
        } else {
            clauses.push(Clause::skipped("regular character is eps(Lambda) lambda", "regular character of an involutory Hopf algebra", "not involutory"));
        }
        let gated = separable && ints.involutory;
        if gated {
            clauses.push(Clause::check("bi-symmetric", "separable involutory Hopf algebras", symmetric && dual_symmetric, json!(symmetric), json!(dual_symmetric)));
            let chi_in_line = |v: &[Scalar]| Matrix::from_rows(f, vec![v.to_vec(), chi_reg.clone()]).expect("rows").rank() == 1;
            clauses.push(Clause::check(
                "dual integrals are spanned by the regular character",
                "separable involutory Hopf algebras",
                chi_in_line(dual_ints.left.coeffs()) && chi_in_line(dual_ints.right.coeffs()),
                json!(true),
                json!(true),
            ));
            let lambda_one = self.algebra.unit().eval(&hf.pair.lambda);
            clauses.push(Clause::compare(
                "dual dimension ideal is dim H",
                "separable involutory Hopf algebras",
                json!(lambda_one.is_zero()),
                json!(f.from_int(n as i64).is_zero()),
            ));
            // b_lambda restrictions
            let center = self.algebra.center_basis();
            let image: Vec<Vec<Scalar>> = center.iter().map(|z| b_lambda.mul_vec(z.coeffs())).collect();
            let ok = same_span(f, &image, &trace_forms);
            clauses.push(Clause::check(
                "b_lambda maps the center onto trace forms",
                "center and trace forms",
                ok,
                json!(center.len()),
                json!(trace_forms.len()),
            ));
            let cocomm = self.cocommutative_basis();
            let image: Vec<Vec<Scalar>> = cocomm.iter().map(|c| b_lambda.mul_vec(c.coeffs())).collect();
            let dual_center: Vec<Vec<Scalar>> = dual.algebra().center_basis().into_iter().map(Element::into_coeffs).collect();
            let ok = same_span(f, &image, &dual_center);
            clauses.push(Clause::check(
                "b_lambda maps cocommutative elements onto the dual center",
                "cocommutative elements and the dual center",
                ok,
                json!(cocomm.len()),
                json!(dual_center.len()),
            ));
        } else {
            for name in [
                "bi-symmetric",
                "dual integrals are spanned by the regular character",
                "dual dimension ideal is dim H",
                "b_lambda maps the center onto trace forms",
                "b_lambda maps cocommutative elements onto the dual center",
            ] {
                clauses.push(Clause::skipped(name, "separable involutory Hopf algebras", "requires separable and involutory"));
            }
        }
        Ok(SymmetryReport { symmetric, dual_symmetric, bi_symmetric: symmetric && dual_symmetric, lambda_is_trace, b_lambda, clauses })
    }

    /// `rho(e_i) = sum_{j,k} d[i][j][k] rho^M_j (x) rho^N_k`.
    pub fn tensor_module(&self, m: &Representation, n: &Representation) -> Result<Representation> {
        self.check_module(m)?;
        self.check_module(n)?;
        let f = self.field();
        let d = m.dim() * n.dim();
        let matrices = (0..self.dim())
            .map(|i| {
                let mut acc = Matrix::zeros(f, d, d);
                for (j, k, c) in &self.comul[i] {
                    acc = acc.add(&m.matrix(*j).kron(n.matrix(*k)).scale(c));
                }
                acc
            })
            .collect();
        let t = Representation::new(&self.algebra, matrices)?;
        for i in 0..self.dim() {
            let mut expected = f.zero();
            for (j, k, c) in &self.comul[i] {
                expected = &expected + &(c * &(&m.character()[*j] * &n.character()[*k]));
            }
            if t.character()[i] != expected {
                return Err(Error::Corruption(format!("tensor character mismatch at e{i}")));
            }
        }
        Ok(t)
    }

    /// `rho*(e_i) = rho(S(e_i))^T`.
    pub fn dual_module(&self, m: &Representation) -> Result<Representation> {
        self.check_module(m)?;
        let matrices = (0..self.dim()).map(|i| m.action(&self.antipode.column(i)).transpose()).collect();
        let d = Representation::new(&self.algebra, matrices)?;
        for i in 0..self.dim() {
            let expected = self.antipode.column(i).iter().zip(m.character()).fold(self.field().zero(), |mut acc, (s, c)| {
                acc.add_mul(s, c);
                acc
            });
            if d.character()[i] != expected {
                return Err(Error::Corruption(format!("dual character mismatch at e{i}")));
            }
        }
        Ok(d)
    }

    fn check_module(&self, m: &Representation) -> Result<()> {
        if same_parent(m.algebra(), &self.algebra) {
            Ok(())
        } else {
            Err(Error::PreconditionFailed("module over a different algebra".into()))
        }
    }

    /// Whether evaluation `M (x) M* -> k` is a module map.
    pub fn trace_map_is_module_map(&self, m: &Representation) -> Result<bool> {
        let md = self.dual_module(m)?;
        let t = self.tensor_module(m, &md)?;
        let d = m.dim();
        let f = self.field();
        let mut ev = vec![f.zero(); d * d];
        for p in 0..d {
            ev[p * d + p] = f.one();
        }
        Ok((0..self.dim()).all(|i| {
            let lhs = t.matrix(i).vec_mul(&ev);
            let rhs: Vec<Scalar> = ev.iter().map(|x| x * &self.counit[i]).collect();
            lhs == rhs
        }))
    }

    /// Index and idempotent formulas for a Schur module of a separable
    /// involutory Hopf algebra.
    pub fn hopf7_report(&self, m: &Representation) -> Result<Vec<Clause>> {
        const ANCHOR: &str = "separable involutory Hopf index formula";
        let hf = self.frobenius_from_integrals()?;
        let ints = &hf.integrals;
        if !ints.involutory {
            return Err(Error::PreconditionFailed("antipode is not involutory".into()));
        }
        let dim_eps = ints.right.eval(&self.counit);
        if dim_eps.is_zero() {
            return Err(Error::PreconditionFailed("Hopf algebra is not separable".into()));
        }
        let an = analyze_module(&hf.frobenius, m)?;
        if !an.schur {
            return Err(Error::NotSchur(an.end_dim));
        }
        let f = self.field();
        let dim_m = f.from_int(m.dim() as i64);
        let mut out = vec![Clause::check("dim M invertible", ANCHOR, !dim_m.is_zero(), dim_m.to_json(), json!("nonzero"))];
        let index = an.index()?.clone();
        let expected = dim_eps.checked_div(&dim_m)?;
        out.push(Clause::compare("index is eps(Lambda)/dim M", ANCHOR, index.to_json(), expected.to_json()));
        let e = an.idempotent()?;
        let n = self.dim();
        let b_e: Vec<Value> = (0..n).map(|k| hf.frobenius.beta(e.coeffs(), self.algebra.basis_element(k).coeffs()).to_json()).collect();
        let inv = index.inv()?;
        let rhs: Vec<Value> = m.character().iter().map(|c| (c * &inv).to_json()).collect();
        out.push(Clause::compare("b_lambda(e(M)) = [H:M]^-1 chi_M", ANCHOR, Value::Array(b_e), Value::Array(rhs)));
        let chi_reg = self.algebra.regular_character()?;
        let lhs: Vec<Value> = (0..n).map(|k| (e * &self.algebra.basis_element(k)).eval(&chi_reg).to_json()).collect();
        let rhs: Vec<Value> = m.character().iter().map(|c| (c * &dim_m).to_json()).collect();
        out.push(Clause::compare("regular character form gives dim M chi_M", ANCHOR, Value::Array(lhs), Value::Array(rhs)));
        Ok(out)
    }
}

/// First nonzero coordinate scaled to 1.
pub fn canonical(v: &Element) -> Element {
    match v.coeffs().iter().find(|c| !c.is_zero()) {
        Some(c) => v.scale(&c.inv().expect("nonzero")),
        None => v.clone(),
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

fn same_span(f: &Field, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let rank = |rows: Vec<Vec<Scalar>>| if rows.is_empty() { 0 } else { Matrix::from_rows(f, rows).expect("rows").rank() };
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    let both = rank(a.iter().chain(b).cloned().collect());
    ra == a.len() && ra == rb && both == ra
}

/// Deterministic search for an invertible element in a span: basis vectors
/// first, then small integer combinations.
fn find_invertible(a: &Arc<Algebra>, span: &[Vec<Scalar>]) -> Option<Element> {
    if span.is_empty() {
        return None;
    }
    let f = a.field();
    let mut candidates: Vec<Vec<Scalar>> = span.to_vec();
    for t in 1..=24i64 {
        let mut v = vec![f.zero(); a.dim()];
        for (k, s) in span.iter().enumerate() {
            let c = f.from_int(((k as i64 + 1) * 7 * t + t * t) % 23 - 11);
            for (x, y) in v.iter_mut().zip(s) {
                x.add_mul(&c, y);
            }
        }
        candidates.push(v);
    }
    candidates.into_iter().map(|v| a.element(v).expect("length dim")).find(|e| e.inverse().is_some())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| Value::Array(r.iter().map(Scalar::to_json).collect())).collect())
}

#[derive(Clone, Debug)]
pub struct Integrals {
    /// Canonical right integral (first nonzero coordinate 1).
    pub right: Element,
    pub left: Element,
    pub unimodular: bool,
    pub involutory: bool,
    pub antipode_invertible: bool,
    pub left_is_antipode_image: bool,
}

#[derive(Clone, Debug)]
pub struct IntegralPair {
    pub right: Element,
    pub lambda: Vec<Scalar>,
}

#[derive(Debug)]
pub struct HopfFrobenius {
    pub frobenius: FrobeniusStructure,
    pub pair: IntegralPair,
    pub integrals: Integrals,
    pub dual: Arc<Hopf>,
    /// Gram-inverse dual bases agree with `Lambda_2 (x) S(Lambda_1)`.
    pub dual_bases_agree: bool,
    pub orthogonal: bool,
}

#[derive(Clone, Debug)]
pub struct MaschkeReport {
    pub dim_eps: Scalar,
    pub separable: bool,
    pub idempotent_integral: Option<Element>,
    pub clauses: Vec<Clause>,
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub dual_symmetric: bool,
    pub bi_symmetric: bool,
    pub lambda_is_trace: bool,
    pub b_lambda: Matrix,
    pub clauses: Vec<Clause>,
}

impl SymmetryReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.status != Status::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic_group, dual_group_hopf, group_hopf, irreducible_bundle, sweedler_h4, symmetric_group};

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn group_algebra_integrals() {
        let g = group_hopf(&symmetric_group(3).unwrap(), &q()).unwrap();
        let ints = g.hopf.integrals().unwrap();
        assert!(ints.unimodular && ints.involutory && ints.left_is_antipode_image);
        assert_eq!(ints.right, g.pair.right);
        let hf = g.hopf.frobenius_from_integrals().unwrap();
        assert_eq!(hf.pair.lambda, g.pair.lambda);
        assert!(hf.dual_bases_agree && hf.orthogonal);
        let m = g.hopf.maschke_report().unwrap();
        assert_eq!(m.dim_eps, q().from_int(6));
        assert!(m.separable && crate::report::all_pass(&m.clauses));
    }

    #[test]
    fn sweedler_facts() {
        let h = sweedler_h4(&q()).unwrap();
        let ints = h.integrals().unwrap();
        assert!(!ints.unimodular && !ints.involutory && ints.left_is_antipode_image);
        assert!(ints.right.eval(h.counit()).is_zero());
        let hf = h.frobenius_from_integrals().unwrap();
        assert!(hf.dual_bases_agree && hf.orthogonal);
        assert!(!hf.frobenius.is_symmetric());
        assert!(!hf.frobenius.nakayama().is_identity());
        assert!(!h.is_symmetric().unwrap());
        let m = h.maschke_report().unwrap();
        assert!(!m.separable && crate::report::all_pass(&m.clauses));
        let s = h.symmetry_suite().unwrap();
        assert!(s.all_pass() && !s.symmetric);
        let one_plus_x = h.algebra().element(vec![q().one(), q().zero(), q().one(), q().zero()]).unwrap();
        assert!(!h.is_group_like(&one_plus_x));
        assert!(h.is_group_like(&h.algebra().unit()));
    }

    #[test]
    fn double_dual_is_identity() {
        for h in [sweedler_h4(&q()).unwrap(), group_hopf(&symmetric_group(3).unwrap(), &q()).unwrap().hopf] {
            let dd = h.dual().unwrap().dual().unwrap();
            assert_eq!(dd.algebra().as_ref(), h.algebra().as_ref());
            assert_eq!(dd.antipode(), h.antipode());
            assert_eq!(dd.counit(), h.counit());
            assert_eq!(dd.algebra().labels(), h.algebra().labels());
            for i in 0..h.dim() {
                assert_eq!(dd.comul_terms(i), h.comul_terms(i));
            }
        }
    }

    #[test]
    fn dual_of_group_algebra() {
        let d = dual_group_hopf(&symmetric_group(3).unwrap(), &q()).unwrap();
        assert!(d.hopf.algebra().is_commutative());
        assert_eq!(d.group_likes.len(), 2);
        let ints = d.hopf.integrals().unwrap();
        assert!(ints.unimodular && ints.involutory);
        let c2 = dual_group_hopf(&cyclic_group(2).unwrap(), &q()).unwrap();
        assert_eq!(c2.group_likes.len(), 2);
    }

    #[test]
    fn symmetry_of_s3_and_c4() {
        let g = group_hopf(&symmetric_group(3).unwrap(), &q()).unwrap();
        let s = g.hopf.symmetry_suite().unwrap();
        assert!(s.symmetric && s.bi_symmetric && s.lambda_is_trace);
        assert!(s.all_pass());
        assert!(s.clauses.iter().all(|c| c.status == Status::Pass), "{:?}", s.clauses);
        let c4 = group_hopf(&cyclic_group(4).unwrap(), &q()).unwrap();
        assert_eq!(c4.hopf.cocommutative_basis().len(), 4);
        assert!(c4.hopf.symmetry_suite().unwrap().all_pass());
    }

    #[test]
    fn tensor_and_dual_modules() {
        let b = irreducible_bundle("S3", &q()).unwrap();
        let h = &b.group.hopf;
        let [triv, sgn, v] = [&b.irreducibles[0], &b.irreducibles[1], &b.irreducibles[2]];
        assert_eq!(h.tensor_module(sgn, sgn).unwrap().character(), triv.character());
        assert_eq!(h.tensor_module(triv, v).unwrap().character(), v.character());
        let vv = h.tensor_module(v, v).unwrap();
        for i in 0..6 {
            assert_eq!(vv.character()[i], &(&triv.character()[i] + &sgn.character()[i]) + &v.character()[i]);
        }
        assert_eq!(h.dual_module(v).unwrap().character(), v.character());
        assert!(h.trace_map_is_module_map(v).unwrap());
    }

    #[test]
    fn hopf7_on_s3() {
        let b = irreducible_bundle("S3", &q()).unwrap();
        let h = &b.group.hopf;
        for m in &b.irreducibles {
            let clauses = h.hopf7_report(m).unwrap();
            assert!(clauses.iter().all(|c| c.status == Status::Pass), "{clauses:?}");
        }
        let err = sweedler_h4(&q()).unwrap().hopf7_report(&b.irreducibles[0]);
        assert!(err.is_err());
    }

    #[test]
    fn axiom_violations_are_named() {
        let h = group_hopf(&cyclic_group(2).unwrap(), &q()).unwrap().hopf;
        let a = h.algebra();
        let one = q().one();
        let good: Vec<_> = (0..2).map(|g| (g, g, g, one.clone())).collect();
        let err = Hopf::new(a, good.clone(), vec![one.clone(), q().zero()], h.antipode().clone()).unwrap_err();
        assert_eq!(err, Error::Counit(1));
        let err = Hopf::new(a, good, vec![one.clone(); 2], Matrix::identity(&q(), 2).scale(&q().from_int(2))).unwrap_err();
        assert_eq!(err, Error::Antipode(0));
        // Delta(g) = 1 (x) g + g (x) 1 - 1 (x) 1 is counital but not multiplicative
        let bad = vec![(0, 0, 0, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one.clone()), (1, 0, 0, -one.clone())];
        let err = Hopf::new(a, bad, vec![one.clone(); 2], h.antipode().clone()).unwrap_err();
        assert!(matches!(err, Error::Bialgebra(_, _)), "{err:?}");
    }
}
