//! Modules given by representing matrices: characters, intertwiners,
//! central characters, `z(M)`, the index `[A:M]` and central idempotents.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{same_parent, Algebra, Element};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusStructure;
use crate::math::{char_poly, kernel_basis, Field, Matrix, Scalar};
use crate::report::{Clause, Status};

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dim: usize,
    matrices: Vec<Matrix>,
    character: Vec<Scalar>,
}

impl Representation {
    /// Verifies `rho_i rho_j = sum_k c[i][j][k] rho_k` and `rho(1) = I`.
    pub fn new(algebra: &Arc<Algebra>, matrices: Vec<Matrix>) -> Result<Representation> {
        let n = algebra.dim();
        let f = algebra.field();
        if matrices.len() != n {
            return Err(Error::ShapeMismatch(format!("{} matrices for an algebra of dimension {n}", matrices.len())));
        }
        let dim = matrices[0].rows();
        for m in &matrices {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::ShapeMismatch(format!("module matrices must all be {dim}x{dim}")));
            }
            if m.field() != f {
                return Err(Error::FieldMismatch(f.to_string(), m.field().to_string()));
            }
        }
        if dim == 0 {
            return Err(Error::ShapeMismatch("module dimension must be at least 1".into()));
        }
        let rep = Representation { algebra: Arc::clone(algebra), dim, character: matrices.iter().map(Matrix::trace).collect(), matrices };
        for i in 0..n {
            for j in 0..n {
                let lhs = &rep.matrices[i] * &rep.matrices[j];
                let mut rhs = Matrix::zeros(f, dim, dim);
                for (k, c) in algebra.product_terms(i, j) {
                    rhs = rhs.add(&rep.matrices[*k].scale(c));
                }
                if lhs != rhs {
                    return Err(Error::NotAModule(i, j));
                }
            }
        }
        if !rep.action(algebra.unit_coefficients()).is_identity() {
            return Err(Error::PreconditionFailed("the unit does not act as the identity".into()));
        }
        Ok(rep)
    }

    /// The left regular module.
    pub fn regular(algebra: &Arc<Algebra>) -> Representation {
        let matrices = (0..algebra.dim()).map(|i| algebra.basis_element(i).left_regular_matrix()).collect();
        Representation::new(algebra, matrices).expect("the regular representation is a module")
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// `chi_M(e_i)` for every basis element.
    pub fn character(&self) -> &[Scalar] {
        &self.character
    }

    /// Matrix of an element given by coefficients.
    pub fn action(&self, a: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.algebra.field(), self.dim, self.dim);
        for (c, m) in a.iter().zip(&self.matrices) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !same_parent(&self.algebra, &other.algebra) {
            return Err(Error::PreconditionFailed("modules over different algebras".into()));
        }
        let f = self.algebra.field();
        let d = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(f, d, d);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Representation::new(&self.algebra, matrices)
    }

    pub fn end_dim(&self) -> usize {
        hom_space(self, self).map(|b| b.len()).unwrap_or(0)
    }
}

/// Basis of `Hom_A(M, N) = {T : T rho^M_i = rho^N_i T}`; each `T` is
/// `dim N x dim M`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Matrix>> {
    if !same_parent(&m.algebra, &n.algebra) {
        return Err(Error::PreconditionFailed("modules over different algebras".into()));
    }
    let f = m.algebra.field();
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dm * dn;
    let mut rows = Vec::new();
    for (rm, rn) in m.matrices.iter().zip(&n.matrices) {
        for p in 0..dn {
            for r in 0..dm {
                // (T rm)[p][r] - (rn T)[p][r] with T[p][q] at index p * dm + q
                let mut row = vec![f.zero(); unknowns];
                for q in 0..dm {
                    row[p * dm + q] = &row[p * dm + q] + rm.get(q, r);
                }
                for s in 0..dn {
                    row[s * dm + r] = &row[s * dm + r] - rn.get(p, s);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut v = vec![f.zero(); unknowns];
                v[i] = f.one();
                v
            })
            .collect()
    } else {
        kernel_basis(&Matrix::from_rows(f, rows)?)
    };
    Ok(basis
        .into_iter()
        .map(|v| {
            let rows = v.chunks(dm).map(<[Scalar]>::to_vec).collect();
            Matrix::from_rows(f, rows).expect("well-formed")
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct ModuleAnalysis {
    pub end_dim: usize,
    pub schur: bool,
    /// `z(M) = sum_i chi_M(x_i) y_i`.
    pub z: Element,
    /// Central character on the center basis, when Schur.
    pub omega: Option<Vec<(Element, Scalar)>>,
    index: std::result::Result<Scalar, Error>,
    idempotent: std::result::Result<Element, Error>,
}

impl ModuleAnalysis {
    /// `[A:M] = omega_M(z(M))`.
    pub fn index(&self) -> Result<&Scalar> {
        self.index.as_ref().map_err(Clone::clone)
    }

    /// `e(M) = [A:M]^{-1} z(M)`.
    pub fn idempotent(&self) -> Result<&Element> {
        self.idempotent.as_ref().map_err(Clone::clone)
    }
}

/// Scalar by which a central element acts on a Schur module.
pub fn central_character(m: &Representation, a: &[Scalar]) -> Option<Scalar> {
    m.action(a).scalar_value()
}

pub fn analyze_module(fs: &FrobeniusStructure, m: &Representation) -> Result<ModuleAnalysis> {
    let a = fs.algebra();
    if !same_parent(a, &m.algebra) {
        return Err(Error::PreconditionFailed("module and form live on different algebras".into()));
    }
    let n = a.dim();
    let mut z = a.zero_element();
    for i in 0..n {
        z = &z + &fs.y(i).scale(&m.character[i]);
    }
    for i in 0..n {
        if fs.beta(a.basis_element(i).coeffs(), z.coeffs()) != m.character[i] {
            return Err(Error::Corruption(format!("chi_M(e{i}) differs from beta(e{i}, z(M))")));
        }
    }
    if fs.is_symmetric() && !z.is_central() {
        return Err(Error::Corruption("z(M) is not central for a symmetric form".into()));
    }
    let end_dim = m.end_dim();
    let schur = end_dim == 1;
    let omega: Option<Vec<(Element, Scalar)>> = schur.then(|| {
        a.center_basis()
            .into_iter()
            .map(|c| {
                let w = central_character(m, c.coeffs()).expect("central elements act by scalars on Schur modules");
                (c, w)
            })
            .collect()
    });
    let index = if !schur {
        Err(Error::NotSchur(end_dim))
    } else if !fs.is_symmetric() {
        Err(Error::PreconditionFailed("the form is not symmetric".into()))
    } else {
        Ok(central_character(m, z.coeffs()).expect("z(M) is central"))
    };
    let idempotent = match &index {
        Err(e) => Err(e.clone()),
        Ok(ix) if ix.is_zero() => Err(Error::IndexNotInvertible),
        Ok(ix) => Ok(z.scale(&ix.inv().expect("nonzero"))),
    };
    if let (Ok(e), Some(om)) = (&idempotent, &omega) {
        if !central_character(m, e.coeffs()).is_some_and(|w| w.is_one()) {
            return Err(Error::Corruption("omega_M(e(M)) != 1".into()));
        }
        if &(e * e) != e {
            return Err(Error::Corruption("e(M) is not idempotent".into()));
        }
        for (c, w) in om.iter() {
            if c * e != e.scale(w) {
                return Err(Error::Corruption("x e(M) != omega_M(x) e(M) on the center".into()));
            }
        }
    }
    Ok(ModuleAnalysis { end_dim, schur, z, omega, index, idempotent })
}

/// The three idempotent statements for a Schur module with invertible index:
/// `omega(z) dim M = [A:M] rank e(M)A`, `rank e(M)A = (dim M)^2`, and
/// `chi_reg(e(M) e_i) = dim M chi_M(e_i)`.
pub fn verify_idempotent_theorems(fs: &FrobeniusStructure, m: &Representation, analysis: &ModuleAnalysis) -> Vec<Clause> {
    const ANCHOR: &str = "central idempotent of a Schur module";
    let a = fs.algebra();
    let f = a.field();
    let (e, index) = match (analysis.idempotent(), analysis.index()) {
        (Ok(e), Ok(ix)) => (e.clone(), ix.clone()),
        (Err(err), _) | (_, Err(err)) => {
            return ["rank identity", "block rank", "regular character"]
                .iter()
                .map(|n| Clause::undefined(*n, ANCHOR, err.to_string()))
                .collect();
        }
    };
    let dim_m = f.from_int(m.dim as i64);
    let z = fs.casimir_element();
    let omega_z = central_character(m, z.coeffs()).expect("Casimir element is central");
    let rank = e.left_regular_matrix().rank();
    let rank_s = f.from_int(rank as i64);
    let mut out = vec![Clause::compare(
        "rank identity",
        ANCHOR,
        (&omega_z * &dim_m).to_json(),
        (&index * &rank_s).to_json(),
    )];
    if fs.is_separable().separable {
        out.push(Clause::compare("block rank", ANCHOR, json!(rank), json!(m.dim * m.dim)));
        let chi_reg = a.regular_character().expect("valid algebra");
        let lhs: Vec<Value> = (0..a.dim()).map(|i| (&e * &a.basis_element(i)).eval(&chi_reg).to_json()).collect();
        let rhs: Vec<Value> = m.character.iter().map(|c| (c * &dim_m).to_json()).collect();
        out.push(Clause::compare("regular character", ANCHOR, Value::Array(lhs), Value::Array(rhs)));
    } else {
        out.push(Clause::skipped("block rank", ANCHOR, "algebra is not separable"));
        out.push(Clause::skipped("regular character", ANCHOR, "algebra is not separable"));
    }
    out
}

/// Certificate that the basis spans an order: the structure constants and
/// the Casimir tensor `sum_i x_i (x) y_i` have integral coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakForm {
    pub description: String,
}

impl WeakForm {
    /// The lattice spanned by the defining basis, e.g. `ZG` inside `kG`.
    pub fn basis_order(description: impl Into<String>) -> WeakForm {
        WeakForm { description: description.into() }
    }
}

/// Whether a scalar is an algebraic integer: its characteristic polynomial
/// over Q (from the multiplication matrix on the power basis) has integer
/// coefficients.
pub fn is_algebraic_integer(s: &Scalar) -> bool {
    match s.field() {
        Field::Prime(_) => true,
        Field::Rationals => s.as_rational().is_some_and(|q| q.is_integer()),
        Field::Cyclotomic(_) => {
            let q = Field::rationals();
            let rows = s
                .regular_matrix_over_prime_field()
                .into_iter()
                .map(|r| r.into_iter().map(|x| q.from_rational(&x).expect("Q")).collect())
                .collect();
            let m = Matrix::from_rows(&q, rows).expect("square");
            char_poly(&m).expect("square").iter().all(|c| c.as_integer().is_some())
        }
    }
}

pub fn integrality_check(
    fs: &FrobeniusStructure,
    m: &Representation,
    analysis: &ModuleAnalysis,
    certificate: Option<&WeakForm>,
) -> Result<Vec<Clause>> {
    const ANCHOR: &str = "integrality over an order";
    let cert = certificate.ok_or(Error::NoWeakForm)?;
    let a = fs.algebra();
    let n = a.dim();
    let structure_ok = (0..n).all(|i| (0..n).all(|j| a.product_terms(i, j).iter().all(|(_, c)| c.has_integral_coefficients())))
        && a.unit_coefficients().iter().all(Scalar::has_integral_coefficients);
    let inv = fs.gram_inverse();
    let casimir_ok = (0..n).all(|i| (0..n).all(|j| inv.get(i, j).has_integral_coefficients()));
    let mut out = vec![
        Clause::check("order structure constants", ANCHOR, structure_ok, json!(cert.description), json!("integral")),
        Clause::check("order contains dual bases", ANCHOR, casimir_ok, json!(cert.description), json!("integral")),
    ];
    let chi_z = analysis.z.eval(&m.character);
    out.push(Clause::check("chi_M(z(M)) integral", ANCHOR, is_algebraic_integer(&chi_z), chi_z.to_json(), json!("algebraic integer")));
    match analysis.index() {
        Ok(ix) => {
            let ok = is_algebraic_integer(ix);
            let mut c = Clause::check("index integral", ANCHOR, ok, ix.to_json(), json!("algebraic integer"));
            if let Some(k) = ix.as_integer() {
                c.witness = Some(json!(k.to_string()));
            }
            out.push(c);
        }
        Err(e) => out.push(Clause::undefined("index integral", ANCHOR, e.to_string())),
    }
    if !(structure_ok && casimir_ok) {
        for c in out.iter_mut().skip(2) {
            if c.status == Status::Fail {
                c.status = Status::Skipped;
            }
        }
    }
    Ok(out)
}
