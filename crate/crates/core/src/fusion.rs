//! Grothendieck rings of split semisimple Hopf algebras as based rings:
//! fusion coefficients, the adjoint class and its spectrum, the class
//! equation, and the primes where the ring stays semisimple.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::Element;
use crate::constructors::GroupTable;
use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::math::poly::{is_prime_u64, prime_factors};
use crate::math::{char_poly, integer_roots_of_scalars, kernel_basis, lattice_meet_line, solve_linear, Field, IntLattice, Matrix, Scalar};
use crate::rep::{hom_space, Representation};
use crate::report::Clause;

/// A based commutative-or-not ring `[V_i][V_j] = sum_k N[i][j][k] [V_k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    labels: Vec<String>,
    dims: Vec<u64>,
    dual: Vec<usize>,
    unit: usize,
    /// Dense, index `(i * r + j) * r + k`.
    n: Vec<u64>,
    central_in_dual: Option<Vec<bool>>,
}

/// Integer coefficient vector on the fusion basis.
pub type FusionElement = Vec<BigInt>;

impl FusionRing {
    /// Validates associativity, the unit, the duality and dimensions.
    pub fn new(
        labels: Vec<String>,
        dims: Vec<u64>,
        dual: Vec<usize>,
        unit: usize,
        triples: Vec<(usize, usize, usize, u64)>,
        central_in_dual: Option<Vec<bool>>,
    ) -> Result<FusionRing> {
        let r = dims.len();
        let bad = |m: String| Err(Error::InvalidFusion(m));
        if r == 0 {
            return bad("rank 0".into());
        }
        let labels = if labels.is_empty() { (0..r).map(|i| format!("V{i}")).collect() } else { labels };
        if labels.len() != r || dual.len() != r || unit >= r {
            return bad(format!("labels, dims and dual must have length {r} and unit must be below it"));
        }
        if central_in_dual.as_ref().is_some_and(|c| c.len() != r) {
            return bad("central_in_dual has the wrong length".into());
        }
        let mut n = vec![0u64; r * r * r];
        for (i, j, k, c) in triples {
            if i >= r || j >= r || k >= r {
                return bad(format!("index ({i}, {j}, {k}) out of range"));
            }
            n[(i * r + j) * r + k] += c;
        }
        let fr = FusionRing { rank: r, labels, dims, dual, unit, n, central_in_dual };
        fr.validate()?;
        Ok(fr)
    }

    fn validate(&self) -> Result<()> {
        let r = self.rank;
        let bad = |m: String| Err(Error::InvalidFusion(m));
        if self.dims.contains(&0) {
            return bad("dimensions must be positive".into());
        }
        for j in 0..r {
            for k in 0..r {
                let delta = u64::from(j == k);
                if self.coeff(self.unit, j, k) != delta || self.coeff(j, self.unit, k) != delta {
                    return bad(format!("unit law fails at ({j}, {k})"));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|m| self.coeff(i, j, m) * self.coeff(m, k, l)).sum();
                        let rhs: u64 = (0..r).map(|m| self.coeff(j, k, m) * self.coeff(i, m, l)).sum();
                        if lhs != rhs {
                            return bad(format!("associativity fails at ({i}, {j}, {k}) -> {l}"));
                        }
                    }
                }
            }
        }
        for i in 0..r {
            let s = self.dual[i];
            if s >= r || self.dual[s] != i {
                return bad(format!("dual is not an involution at {i}"));
            }
            for j in 0..r {
                if self.coeff(i, self.dual[j], self.unit) != u64::from(i == j) {
                    return bad(format!("duality pairing fails at ({i}, {j})"));
                }
            }
            if self.dims[s] != self.dims[i] {
                return bad(format!("dual of {i} has a different dimension"));
            }
            for j in 0..r {
                let sum: u64 = (0..r).map(|k| self.coeff(i, j, k) * self.dims[k]).sum();
                if sum != self.dims[i] * self.dims[j] {
                    return bad(format!("dimension is not multiplicative at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn central_in_dual(&self) -> Option<&[bool]> {
        self.central_in_dual.as_deref()
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u64 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    /// Nonzero `(i, j, k, N)` in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, u64)> {
        let r = self.rank;
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let c = self.coeff(i, j, k);
                    if c != 0 {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }

    /// `dim H = sum_i d_i^2`.
    pub fn dim_h(&self) -> u64 {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| self.coeff(i, j, k) == self.coeff(j, i, k))))
    }

    pub fn basis(&self, i: usize) -> FusionElement {
        let mut v = vec![BigInt::zero(); self.rank];
        v[i] = BigInt::one();
        v
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> FusionElement {
        let r = self.rank;
        let mut out = vec![BigInt::zero(); r];
        for i in (0..r).filter(|&i| !a[i].is_zero()) {
            for j in (0..r).filter(|&j| !b[j].is_zero()) {
                let ab = &a[i] * &b[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if c != 0 {
                        *slot += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// The involution `[V]* = [V*]`.
    pub fn star(&self, a: &[BigInt]) -> FusionElement {
        let mut out = vec![BigInt::zero(); self.rank];
        for (i, c) in a.iter().enumerate() {
            out[self.dual[i]] = c.clone();
        }
        out
    }

    /// `beta(a, b)`: the coefficient of the unit in `ab`.
    pub fn beta(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        self.mul(a, b)[self.unit].clone()
    }

    pub fn dim_of(&self, a: &[BigInt]) -> BigInt {
        a.iter().zip(&self.dims).map(|(c, d)| c * d).sum()
    }

    /// Matrix of `x -> a x` over `field`; column `j` is `a e_j`.
    pub fn left_matrix(&self, a: &[BigInt], field: &Field) -> Matrix {
        let r = self.rank;
        let mut m = Matrix::zeros(field, r, r);
        for j in 0..r {
            for (k, c) in self.mul(a, &self.basis(j)).iter().enumerate() {
                m.set(k, j, field.from_bigint(c));
            }
        }
        m
    }

    /// `c(x) = sum_i [V_{sigma(i)}] x [V_i]`.
    pub fn casimir(&self, x: &[BigInt]) -> FusionElement {
        let mut out = vec![BigInt::zero(); self.rank];
        for i in 0..self.rank {
            let t = self.mul(&self.mul(&self.basis(self.dual[i]), x), &self.basis(i));
            for (o, c) in out.iter_mut().zip(t) {
                *o += c;
            }
        }
        out
    }

    /// `[H] = sum_i d_i [V_i]`.
    pub fn regular_class(&self) -> FusionElement {
        self.dims.iter().map(|&d| BigInt::from(d)).collect()
    }

    /// `z = sum_i [V_i][V_i*]` with its defining checks.
    pub fn adjoint_class(&self) -> AdjointClass {
        const ANCHOR: &str = "adjoint class";
        let mut z = vec![BigInt::zero(); self.rank];
        for i in 0..self.rank {
            for (o, c) in z.iter_mut().zip(self.mul(&self.basis(i), &self.basis(self.dual[i]))) {
                *o += c;
            }
        }
        let dim_z = self.dim_of(&z);
        let central = (0..self.rank).all(|i| {
            let e = self.basis(i);
            self.mul(&z, &e) == self.mul(&e, &z)
        });
        let clauses = vec![
            Clause::compare("dim z = dim H", ANCHOR, json!(dim_z.to_string()), json!(self.dim_h().to_string())),
            Clause::check("z is central", ANCHOR, central, json!(central), json!(true)),
            Clause::compare("z is self-dual", ANCHOR, ints_json(&self.star(&z)), ints_json(&z)),
        ];
        AdjointClass { z, clauses }
    }

    /// Eigenvalues of multiplication by the adjoint class.
    pub fn adjoint_spectrum(&self) -> Result<Spectrum> {
        const ANCHOR: &str = "adjoint class spectrum";
        let q = Field::rationals();
        let z = self.adjoint_class().z;
        let lz = self.left_matrix(&z, &q);
        let poly = char_poly(&lz)?;
        let roots = integer_roots_of_scalars(&poly)?;
        let dim_h = BigInt::from(self.dim_h());
        let mut clauses = Vec::new();
        let found = &roots.roots;
        clauses.push(Clause::check(
            "eigenvalues are positive",
            ANCHOR,
            found.iter().all(|x| x.is_positive()),
            ints_json(found),
            json!("> 0"),
        ));
        clauses.push(Clause::check(
            "eigenvalues are at most dim H",
            ANCHOR,
            found.iter().all(|x| x <= &dim_h),
            ints_json(found),
            json!(dim_h.to_string()),
        ));
        clauses.push(Clause::compare(
            "largest eigenvalue is dim H",
            "Frobenius-Perron eigenvalue",
            json!(found.first().map(ToString::to_string)),
            json!(Some(dim_h.to_string())),
        ));
        if self.is_commutative() {
            clauses.push(Clause::check(
                "eigenvalues divide dim H",
                ANCHOR,
                found.iter().all(|x| !x.is_zero() && dim_h.is_multiple_of(x)),
                ints_json(found),
                json!(dim_h.to_string()),
            ));
        } else {
            clauses.push(Clause::skipped("eigenvalues divide dim H", ANCHOR, "fusion ring is not commutative"));
        }
        if !roots.complete {
            clauses.push(Clause::undefined("all eigenvalues are integers", ANCHOR, "characteristic polynomial has non-integer roots"));
        }
        clauses.push(Clause::check("matrix of z is symmetric", "involution on the fusion ring", lz.is_symmetric(), Value::Null, Value::Null));
        let minors = leading_minors(&lz)?;
        let positive = minors.iter().all(|m| m.as_rational().is_some_and(|x| x.is_positive()));
        clauses.push(Clause::check(
            "z gives a positive definite form",
            "positivity of the adjoint class",
            positive,
            Value::Array(minors.iter().map(Scalar::to_json).collect()),
            json!("> 0"),
        ));
        Ok(Spectrum { eigenvalues: roots.roots, complete: roots.complete, char_poly: poly, clauses })
    }

    /// The Casimir image meets `Z 1` in `d Z`; the ring is semisimple mod
    /// `p` exactly when `p` does not divide `d`.
    pub fn ss_locus_mod_p(&self) -> Result<SsLocus> {
        const ANCHOR: &str = "semisimplicity mod p";
        let r = self.rank;
        let images: Vec<FusionElement> = (0..r).map(|j| self.casimir(&self.basis(j))).collect();
        let lattice = IntLattice::from_generators(r, &images)?;
        let d = lattice_meet_line(&lattice, &self.basis(self.unit))?;
        let dim_h = self.dim_h();
        let d_primes: Vec<u64> = prime_factors(&d).iter().filter_map(ToPrimitive::to_u64).collect();
        let h_primes: Vec<u64> = prime_factors(&BigInt::from(dim_h)).iter().filter_map(ToPrimitive::to_u64).collect();
        let mut bound = dim_h.max(d_primes.last().copied().unwrap_or(0));
        bound += 1;
        while !is_prime_u64(bound) {
            bound += 1;
        }
        let mut rows = Vec::new();
        let mut higman_agrees = true;
        for p in (2..=bound).filter(|&p| is_prime_u64(p)) {
            let semisimple = !d.is_zero() && !d.is_multiple_of(&BigInt::from(p));
            let higman = self.higman_mod_p(p, &images)?;
            higman_agrees &= higman == semisimple;
            rows.push(PrimeRow { p, semisimple, higman });
        }
        let mut clauses = vec![
            Clause::check("Casimir image meets the integers", ANCHOR, !d.is_zero(), json!(d.to_string()), json!("nonzero")),
            Clause::check("lattice verdict agrees with Higman over F_p", "Higman criterion", higman_agrees, Value::Null, Value::Null),
            Clause::check(
                "every prime dividing dim H is non-semisimple",
                ANCHOR,
                h_primes.iter().all(|p| d.is_multiple_of(&BigInt::from(*p))),
                json!(h_primes),
                json!(d_primes),
            ),
            Clause::check(
                "every prime above dim H is semisimple",
                ANCHOR,
                !d.is_zero() && d_primes.iter().all(|&p| p <= dim_h),
                json!(d_primes),
                json!(dim_h),
            ),
        ];
        if self.is_commutative() {
            clauses.push(Clause::compare("semisimple exactly off dim H", ANCHOR, json!(d_primes), json!(h_primes)));
        } else {
            clauses.push(Clause::skipped("semisimple exactly off dim H", ANCHOR, "fusion ring is not commutative"));
        }
        Ok(SsLocus { d, primes: rows, clauses })
    }

    /// Whether `1` lies in the Casimir image over `F_p`.
    fn higman_mod_p(&self, p: u64, images: &[FusionElement]) -> Result<bool> {
        let f = Field::prime(p)?;
        let cols: Vec<Vec<Scalar>> = images.iter().map(|v| v.iter().map(|c| f.from_bigint(c)).collect()).collect();
        let c = Matrix::from_columns(&f, self.rank, &cols)?;
        let unit: Vec<Scalar> = self.basis(self.unit).iter().map(|c| f.from_bigint(c)).collect();
        Ok(solve_linear(&c, &unit)?.is_some())
    }

    /// Characters of the commutative ring grouped by `omega(z)`, with the
    /// class-equation quotients `dim H / omega(z)`. Character values are
    /// reported when they are integers.
    pub fn class_equation_check(&self) -> Result<ClassEquation> {
        const ANCHOR: &str = "class equation";
        if !self.is_commutative() {
            return Err(Error::NotCommutative);
        }
        let q = Field::rationals();
        let r = self.rank;
        let z = self.adjoint_class().z;
        let lz = self.left_matrix(&z, &q);
        let ops: Vec<Matrix> = (0..r).map(|i| self.left_matrix(&self.basis(i), &q)).collect();
        let mut z_roots = integer_roots_of_scalars(&char_poly(&lz)?)?.roots;
        z_roots.dedup();
        let dim_h = BigInt::from(self.dim_h());
        let mut rows = Vec::new();
        for w in z_roots {
            let eigen = kernel_basis(&lz.sub(&Matrix::identity(&q, r).scale(&q.from_bigint(&w))));
            let m = eigen.len();
            let mut spaces = vec![Matrix::from_columns(&q, r, &eigen)?];
            for op in &ops {
                let mut next = Vec::new();
                for b in &spaces {
                    let restricted = restrict(op, b)?;
                    let mut roots = integer_roots_of_scalars(&char_poly(&restricted)?)?.roots;
                    roots.dedup();
                    for root in roots {
                        let k = kernel_basis(&restricted.sub(&Matrix::identity(&q, b.cols()).scale(&q.from_bigint(&root))));
                        let cols: Vec<Vec<Scalar>> = k.iter().map(|v| b.mul_vec(v)).collect();
                        next.push(Matrix::from_columns(&q, r, &cols)?);
                    }
                }
                spaces = next;
            }
            let divides = w.is_positive() && dim_h.is_multiple_of(&w);
            let quotient = divides.then(|| &dim_h / &w);
            let mut found = 0;
            let mut group = Vec::new();
            for b in &spaces {
                let v = b.column(0);
                let values: Vec<BigInt> = ops
                    .iter()
                    .map(|op| eigenvalue(op, &v).and_then(|s| s.as_integer()).expect("integer joint eigenvalue"))
                    .collect();
                for _ in 0..b.cols() {
                    group.push(ClassRow { values: Some(values.clone()), omega_z: w.clone(), quotient: quotient.clone(), divides });
                }
                found += b.cols();
            }
            group.sort_by(|a, b| a.values.cmp(&b.values));
            rows.extend(group);
            for _ in found..m {
                rows.push(ClassRow { values: None, omega_z: w.clone(), quotient: quotient.clone(), divides });
            }
        }
        let complete = rows.len() == r;
        let mut clauses = Vec::new();
        for row in &rows {
            clauses.push(Clause::check(
                format!("omega(z) = {} divides dim H", row.omega_z),
                ANCHOR,
                row.divides,
                json!(row.omega_z.to_string()),
                json!(dim_h.to_string()),
            ));
        }
        if complete {
            let total: BigInt = rows.iter().filter_map(|r| r.quotient.clone()).sum();
            clauses.push(Clause::compare("quotients sum to dim H", ANCHOR, json!(total.to_string()), json!(dim_h.to_string())));
        } else {
            clauses.push(Clause::undefined(
                "quotients sum to dim H",
                ANCHOR,
                format!("omega(z) is an integer for {} of {r} characters", rows.len()),
            ));
        }
        Ok(ClassEquation { rows, complete, clauses })
    }

    /// `d_i | dim H` for the irreducibles whose character is central in the dual.
    pub fn zhu_divisibility(&self) -> Vec<ZhuRow> {
        let dim_h = self.dim_h();
        (0..self.rank)
            .filter(|&i| self.central_in_dual.as_ref().is_some_and(|c| c[i]))
            .map(|i| {
                let d = self.dims[i];
                ZhuRow { label: self.labels[i].clone(), dim: d, divides: dim_h.is_multiple_of(d), quotient: dim_h.is_multiple_of(d).then(|| dim_h / d) }
            })
            .collect()
    }

    pub fn zhu_clauses(&self) -> Vec<Clause> {
        let rows = self.zhu_divisibility();
        if self.central_in_dual.is_none() {
            return vec![Clause::skipped("dim V divides dim H", "dimension divisibility", "no central-character flags")];
        }
        rows.iter()
            .map(|r| Clause::check(format!("dim {} divides dim H", r.label), "dimension divisibility", r.divides, json!(r.dim), json!(self.dim_h())))
            .collect()
    }

    /// `[H] = sum d_i [V_i]` spans the integrals of the fusion ring.
    pub fn regular_class_checks(&self) -> Result<Vec<Clause>> {
        const ANCHOR: &str = "regular class";
        let h = self.regular_class();
        let mut out = Vec::new();
        let integral = (0..self.rank).all(|i| {
            let d = BigInt::from(self.dims[i]);
            self.mul(&self.basis(i), &h) == h.iter().map(|c| c * &d).collect::<Vec<_>>()
        });
        out.push(Clause::check("[V][H] = dim V [H]", ANCHOR, integral, ints_json(&h), Value::Null));
        let betas: Vec<BigInt> = (0..self.rank).map(|i| self.beta(&h, &self.basis(i))).collect();
        out.push(Clause::compare("beta([H], [V]) = dim V", ANCHOR, ints_json(&betas), ints_json(&h)));
        let q = Field::rationals();
        let blocks: Vec<Matrix> = (0..self.rank)
            .map(|i| {
                let d = q.from_int(self.dims[i] as i64);
                self.left_matrix(&self.basis(i), &q).sub(&Matrix::identity(&q, self.rank).scale(&d))
            })
            .collect();
        let space = kernel_basis(&Matrix::vstack(&q, self.rank, &blocks));
        out.push(Clause::compare("integrals form the line through [H]", ANCHOR, json!(space.len()), json!(1)));
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "rank": self.rank,
            "labels": self.labels,
            "dims": self.dims,
            "dual": self.dual,
            "unit": self.unit,
            "N": self.triples().iter().map(|(i, j, k, c)| json!([i, j, k, c])).collect::<Vec<_>>(),
        });
        if let Some(c) = &self.central_in_dual {
            v["central_in_dual"] = json!(c);
        }
        v
    }
}

fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// `M` with `B M = A B` for a basis `B` of an `A`-stable subspace.
fn restrict(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let f = a.field();
    let ab = a * b;
    let cols = (0..b.cols())
        .map(|j| solve_linear(b, &ab.column(j))?.ok_or_else(|| Error::Corruption("subspace is not stable".into())))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(f, b.cols(), &cols)
}

fn eigenvalue(a: &Matrix, v: &[Scalar]) -> Option<Scalar> {
    let av = a.mul_vec(v);
    let (k, vk) = v.iter().enumerate().find(|(_, x)| !x.is_zero())?;
    let lambda = av[k].checked_div(vk).ok()?;
    (av.iter().zip(v).all(|(x, y)| x == &(y * &lambda))).then_some(lambda)
}

fn leading_minors(a: &Matrix) -> Result<Vec<Scalar>> {
    (1..=a.rows())
        .map(|k| {
            let rows = (0..k).map(|i| a.row(i)[..k].to_vec()).collect();
            Matrix::from_rows(a.field(), rows)?.det()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct AdjointClass {
    pub z: FusionElement,
    pub clauses: Vec<Clause>,
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Integer eigenvalues, decreasing, with multiplicity.
    pub eigenvalues: Vec<BigInt>,
    pub complete: bool,
    pub char_poly: Vec<Scalar>,
    pub clauses: Vec<Clause>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRow {
    pub p: u64,
    pub semisimple: bool,
    /// Verdict of the Casimir criterion computed directly over `F_p`.
    pub higman: bool,
}

#[derive(Clone, Debug)]
pub struct SsLocus {
    pub d: BigInt,
    pub primes: Vec<PrimeRow>,
    pub clauses: Vec<Clause>,
}

impl SsLocus {
    pub fn is_semisimple_mod(&self, p: u64) -> bool {
        !self.d.is_zero() && !self.d.is_multiple_of(&BigInt::from(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    /// `omega([V_i])` for each basis element, when all are integers.
    pub values: Option<Vec<BigInt>>,
    pub omega_z: BigInt,
    pub quotient: Option<BigInt>,
    pub divides: bool,
}

#[derive(Clone, Debug)]
pub struct ClassEquation {
    pub rows: Vec<ClassRow>,
    pub complete: bool,
    pub clauses: Vec<Clause>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZhuRow {
    pub label: String,
    pub dim: u64,
    pub divides: bool,
    pub quotient: Option<u64>,
}

/// `G_0(H)` from a complete list of irreducible modules. Fusion
/// coefficients are traces of the normalized integral on
/// `V_i (x) V_j (x) V_k*`.
pub fn build_g0(hopf: &Hopf, irreducibles: &[Representation], labels: Vec<String>, central_in_dual: Option<Vec<bool>>) -> Result<FusionRing> {
    let f = hopf.field();
    if f.characteristic() != 0 {
        return Err(Error::PreconditionFailed("the Grothendieck ring is built over characteristic 0".into()));
    }
    let ints = hopf.integrals()?;
    if !ints.involutory {
        return Err(Error::PreconditionFailed("antipode is not involutory".into()));
    }
    let dim_eps = ints.right.eval(hopf.counit());
    if dim_eps.is_zero() {
        return Err(Error::PreconditionFailed("Hopf algebra is not separable".into()));
    }
    let r = irreducibles.len();
    for (i, m) in irreducibles.iter().enumerate() {
        if !crate::algebra::same_parent(m.algebra(), hopf.algebra()) {
            return Err(Error::PreconditionFailed(format!("module {i} is over a different algebra")));
        }
        if m.end_dim() != 1 {
            return Err(Error::NotSplit(i));
        }
        for (j, other) in irreducibles[..i].iter().enumerate() {
            if !hom_space(other, m)?.is_empty() {
                return Err(Error::PreconditionFailed(format!("modules {j} and {i} are isomorphic")));
            }
        }
    }
    let total: usize = irreducibles.iter().map(|m| m.dim() * m.dim()).sum();
    if total != hopf.dim() {
        return Err(Error::NotComplete { got: total.to_string(), expected: hopf.dim().to_string() });
    }
    let n = hopf.dim();
    // (Delta (x) id) Delta (Lambda)
    let mut triple: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    let d = hopf.coproduct(ints.right.coeffs());
    for j in 0..n {
        for k in 0..n {
            let c = d.get(j, k);
            if c.is_zero() {
                continue;
            }
            for (a, b, e) in hopf.comul_terms(j) {
                let slot = triple.entry((*a, *b, k)).or_insert_with(|| f.zero());
                *slot = &*slot + &(c * e);
            }
        }
    }
    let chars: Vec<&[Scalar]> = irreducibles.iter().map(Representation::character).collect();
    let dual_chars: Vec<Vec<Scalar>> = chars.iter().map(|c| hopf.antipode().vec_mul(c)).collect();
    let inv_eps = dim_eps.inv()?;
    let mut triples = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut t = f.zero();
                for ((a, b, c), v) in &triple {
                    if v.is_zero() {
                        continue;
                    }
                    t = &t + &(&(v * &chars[i][*a]) * &(&chars[j][*b] * &dual_chars[k][*c]));
                }
                let value = &t * &inv_eps;
                match value.as_integer().and_then(|x| x.to_u64()) {
                    Some(0) => {}
                    Some(c) => triples.push((i, j, k, c)),
                    None => return Err(Error::NonIntegerMultiplicity(i, j, k, value.to_string())),
                }
            }
        }
    }
    let dual = (0..r)
        .map(|i| {
            (0..r)
                .find(|&k| chars[k] == dual_chars[i].as_slice())
                .ok_or_else(|| Error::InvalidFusion(format!("dual of module {i} is not in the list")))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = (0..r)
        .find(|&i| chars[i] == hopf.counit())
        .ok_or_else(|| Error::InvalidFusion("the trivial module is not in the list".into()))?;
    let dims = irreducibles.iter().map(|m| m.dim() as u64).collect();
    FusionRing::new(labels, dims, dual, unit, triples, central_in_dual)
}

/// Two further routes to the fusion data: `beta` against `dim Hom` of
/// tensor modules, and the character map as a ring homomorphism.
pub fn g0_cross_checks(hopf: &Hopf, irreducibles: &[Representation], fr: &FusionRing) -> Result<Vec<Clause>> {
    let r = fr.rank();
    let mut beta_ok = true;
    let mut hom_dims = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let t = hopf.tensor_module(&irreducibles[i], &irreducibles[j])?;
            let triv = &irreducibles[fr.unit()];
            let h = hom_space(&t, triv)?.len() as u64;
            hom_dims.push(h);
            beta_ok &= BigInt::from(h) == fr.beta(&fr.basis(i), &fr.basis(j));
        }
    }
    let f = hopf.field();
    let n = hopf.dim();
    let mut char_ok = true;
    for i in 0..r {
        for j in 0..r {
            // (chi_i chi_j)(a) = sum chi_i(a_1) chi_j(a_2)
            let product: Vec<Scalar> = (0..n)
                .map(|a| {
                    let mut s = f.zero();
                    for (p, q, c) in hopf.comul_terms(a) {
                        s = &s + &(c * &(&irreducibles[i].character()[*p] * &irreducibles[j].character()[*q]));
                    }
                    s
                })
                .collect();
            let decomposed: Vec<Scalar> = (0..n)
                .map(|a| {
                    let mut s = f.zero();
                    for k in 0..r {
                        s = &s + &(&f.from_int(fr.coeff(i, j, k) as i64) * &irreducibles[k].character()[a]);
                    }
                    s
                })
                .collect();
            char_ok &= product == decomposed;
        }
    }
    Ok(vec![
        Clause::check("beta equals dim Hom(V (x) W, k)", "form on the Grothendieck ring", beta_ok, json!(hom_dims), Value::Null),
        Clause::check("character map is a ring homomorphism", "character map", char_ok, Value::Null, Value::Null),
    ])
}

/// `chi_ad(g) = sum_i chi_{V_i}(g) chi_{V_i*}(g)` at group-like `g`, with
/// centralizer orders when `H` is a group algebra.
pub fn chi_ad_nonvanishing(
    hopf: &Hopf,
    fr: &FusionRing,
    irreducibles: &[Representation],
    group_likes: &[Element],
    table: Option<&GroupTable>,
) -> Result<ChiAdReport> {
    const ANCHOR: &str = "adjoint character at group-likes";
    for (t, g) in group_likes.iter().enumerate() {
        if !hopf.is_group_like(g) {
            return Err(Error::PreconditionFailed(format!("element {t} is not group-like")));
        }
    }
    let values: Vec<Scalar> = group_likes
        .iter()
        .map(|g| {
            let mut s = hopf.field().zero();
            for i in 0..fr.rank() {
                let a = g.eval(irreducibles[i].character());
                let b = g.eval(irreducibles[fr.dual()[i]].character());
                s = &s + &(&a * &b);
            }
            s
        })
        .collect();
    let semisimple = fr.ss_locus_mod_p()?.d != BigInt::zero();
    if !semisimple {
        return Err(Error::PreconditionFailed("representation algebra is not semisimple".into()));
    }
    let mut clauses = Vec::new();
    for (g, v) in group_likes.iter().zip(&values) {
        let label = g.to_string();
        clauses.push(Clause::check(format!("chi_ad({label}) != 0"), ANCHOR, !v.is_zero(), v.to_json(), json!("nonzero")));
        if let Some(t) = table {
            if let Some(idx) = basis_index(g) {
                let c = t.centralizer_order(idx);
                clauses.push(Clause::compare(format!("chi_ad({label}) = |C(g)|"), ANCHOR, v.to_json(), hopf.field().from_int(c as i64).to_json()));
            }
        }
    }
    Ok(ChiAdReport { values, clauses })
}

fn basis_index(g: &Element) -> Option<usize> {
    let nz: Vec<usize> = g.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
    (nz.len() == 1 && g.coeffs()[nz[0]].is_one()).then(|| nz[0])
}

#[derive(Clone, Debug)]
pub struct ChiAdReport {
    pub values: Vec<Scalar>,
    pub clauses: Vec<Clause>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::irreducible_bundle;

    fn g0(name: &str, field: &Field) -> FusionRing {
        let b = irreducible_bundle(name, field).unwrap();
        build_g0(&b.group.hopf, &b.irreducibles, b.labels.clone(), Some(b.central_in_dual.clone())).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn s3_fusion_rules() {
        let fr = g0("S3", &Field::rationals());
        assert_eq!(fr.rank(), 3);
        assert_eq!(fr.mul(&fr.basis(1), &fr.basis(1)), ints(&[1, 0, 0]));
        assert_eq!(fr.mul(&fr.basis(1), &fr.basis(2)), ints(&[0, 0, 1]));
        assert_eq!(fr.mul(&fr.basis(2), &fr.basis(2)), ints(&[1, 1, 1]));
        assert_eq!(fr.adjoint_class().z, ints(&[3, 1, 1]));
        assert_eq!(fr.dim_h(), 6);
    }

    #[test]
    fn s3_spectrum_and_classes() {
        let fr = g0("S3", &Field::rationals());
        let s = fr.adjoint_spectrum().unwrap();
        assert_eq!(s.eigenvalues, ints(&[6, 3, 2]));
        assert!(s.complete && crate::report::all_pass(&s.clauses));
        let ce = fr.class_equation_check().unwrap();
        let q: Vec<_> = ce.rows.iter().map(|r| r.quotient.clone().unwrap()).collect();
        assert_eq!(q, ints(&[1, 2, 3]));
        assert!(ce.complete && crate::report::all_pass(&ce.clauses));
    }

    #[test]
    fn ss_locus_examples() {
        let fr = g0("S3", &Field::rationals());
        let ss = fr.ss_locus_mod_p().unwrap();
        for row in &ss.primes {
            assert_eq!(row.semisimple, row.p != 2 && row.p != 3);
        }
        assert!(crate::report::all_pass(&ss.clauses));
        let c3 = g0("C3", &Field::cyclotomic(3).unwrap());
        let ss = c3.ss_locus_mod_p().unwrap();
        assert_eq!(ss.d, BigInt::from(3));
        assert!(crate::report::all_pass(&ss.clauses));
    }

    #[test]
    fn rank_one_ring() {
        let fr = FusionRing::new(vec![], vec![1], vec![0], 0, vec![(0, 0, 0, 1)], None).unwrap();
        assert_eq!(fr.adjoint_class().z, ints(&[1]));
        assert_eq!(fr.ss_locus_mod_p().unwrap().d, BigInt::one());
        assert_eq!(fr.class_equation_check().unwrap().rows[0].omega_z, BigInt::one());
        let rc = fr.regular_class_checks().unwrap();
        assert!(crate::report::all_pass(&rc), "{rc:?}");
    }

    #[test]
    fn invalid_rings_are_rejected() {
        // dims not multiplicative
        let err = FusionRing::new(vec![], vec![1, 2], vec![0, 1], 0, vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], None);
        assert!(matches!(err, Err(Error::InvalidFusion(_))));
        let err = FusionRing::new(vec![], vec![1], vec![0], 0, vec![(0, 0, 0, 2)], None);
        assert!(matches!(err, Err(Error::InvalidFusion(_))));
    }

    #[test]
    fn pointed_ring_of_s3_is_noncommutative() {
        let g = crate::constructors::symmetric_group(3).unwrap();
        let mut triples = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                triples.push((a, b, g.mul(a, b), 1));
            }
        }
        let dual = (0..6).map(|a| g.inverse(a)).collect();
        let fr = FusionRing::new(vec![], vec![1; 6], dual, 0, triples, None).unwrap();
        assert!(!fr.is_commutative());
        assert_eq!(fr.class_equation_check().unwrap_err(), Error::NotCommutative);
        let s = fr.adjoint_spectrum().unwrap();
        assert_eq!(s.eigenvalues[0], BigInt::from(6));
        assert!(crate::report::all_pass(&s.clauses));
    }
}
