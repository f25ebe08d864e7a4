//! Exact base fields and their elements.
//!
//! Three kinds of field are supported: the rationals, prime fields `F_p`, and
//! cyclotomic fields `Q(zeta_n) = Q[x]/(Phi_n)`. A [`Scalar`] carries its
//! [`Field`] so that values are self-describing; mixing scalars from two
//! different fields in an arithmetic operator is a programming error and
//! panics. Public entry points that accept user data check fields first and
//! return [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use super::poly;
use crate::error::{Error, Result};

/// Data attached to `Q(zeta_n)`: the order and the reduction polynomial.
#[derive(Debug)]
pub struct Cyclotomic {
    order: u32,
    /// Monic Phi_n, lowest degree first.
    modulus: Vec<BigInt>,
    modulus_rat: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

#[derive(Clone, Debug)]
pub enum Field {
    Rationals,
    Prime(u64),
    Cyclotomic(Arc<Cyclotomic>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rationals, Field::Rationals) => true,
            (Field::Prime(p), Field::Prime(q)) => p == q,
            (Field::Cyclotomic(a), Field::Cyclotomic(b)) => a.order == b.order,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
            Field::Cyclotomic(c) => write!(f, "cyclo:{}", c.order),
        }
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// `F_p`; `p` is checked for primality by trial division.
    pub fn prime(p: u64) -> Result<Field> {
        if !poly::is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 62 {
            return Err(Error::InvalidField(format!("prime {p} too large")));
        }
        Ok(Field::Prime(p))
    }

    /// `Q(zeta_n)`, reduced modulo the n-th cyclotomic polynomial.
    pub fn cyclotomic(n: u32) -> Result<Field> {
        if n == 0 {
            return Err(Error::InvalidField("cyclotomic order must be >= 1".into()));
        }
        let modulus = poly::cyclotomic_polynomial(n);
        let modulus_rat = modulus.iter().cloned().map(BigRational::from_integer).collect();
        Ok(Field::Cyclotomic(Arc::new(Cyclotomic { order: n, modulus, modulus_rat })))
    }

    /// Parses `Q`, `Fp:<p>` or `cyclo:<n>`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" || t.eq_ignore_ascii_case("rationals") {
            return Ok(Field::Rationals);
        }
        let bad = || Error::InvalidField(format!("unrecognised field {text:?}"));
        if let Some(p) = t.strip_prefix("Fp:") {
            return Field::prime(p.parse().map_err(|_| bad())?);
        }
        if let Some(n) = t.strip_prefix("cyclo:") {
            return Field::cyclotomic(n.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }

    pub fn to_json(&self) -> Value {
        match self {
            Field::Rationals => serde_json::json!({ "kind": "rationals" }),
            Field::Prime(p) => serde_json::json!({ "kind": "prime", "p": p }),
            Field::Cyclotomic(c) => serde_json::json!({ "kind": "cyclotomic", "n": c.order }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Field> {
        if let Some(s) = v.as_str() {
            return Field::parse(s);
        }
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Format("field needs a \"kind\"".into()))?;
        match kind {
            "rationals" => Ok(Field::Rationals),
            "prime" => {
                let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| Error::Format("prime field needs \"p\"".into()))?;
                Field::prime(p)
            }
            "cyclotomic" => {
                let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Format("cyclotomic field needs \"n\"".into()))?;
                Field::cyclotomic(u32::try_from(n).map_err(|_| Error::InvalidField("order too large".into()))?)
            }
            other => Err(Error::InvalidField(format!("unknown field kind {other:?}"))),
        }
    }

    /// 0 for characteristic zero fields.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        match self {
            Field::Cyclotomic(c) => c.degree(),
            _ => 1,
        }
    }

    pub fn zero(&self) -> Scalar {
        let repr = match self {
            Field::Rationals => Repr::Rat(BigRational::zero()),
            Field::Prime(_) => Repr::Mod(0),
            Field::Cyclotomic(c) => Repr::Cyc(vec![BigRational::zero(); c.degree()]),
        };
        Scalar { field: self.clone(), repr }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(n.clone())).expect("integers embed in every field")
    }

    /// Image of a rational number; fails in `F_p` when p divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        let repr = match self {
            Field::Rationals => Repr::Rat(q.clone()),
            Field::Prime(p) => {
                let num = reduce_mod(q.numer(), *p);
                let den = reduce_mod(q.denom(), *p);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                Repr::Mod(mul_mod(num, inv_mod(den, *p), *p))
            }
            Field::Cyclotomic(c) => {
                let mut v = vec![BigRational::zero(); c.degree()];
                v[0] = q.clone();
                Repr::Cyc(v)
            }
        };
        Ok(Scalar { field: self.clone(), repr })
    }

    /// Builds a cyclotomic element from its power-basis coefficients. Longer
    /// coefficient lists are reduced modulo Phi_n.
    pub fn from_coefficients(&self, coeffs: &[BigRational]) -> Result<Scalar> {
        match self {
            Field::Cyclotomic(c) => Ok(Scalar { field: self.clone(), repr: Repr::Cyc(reduce_cyclo(c, coeffs.to_vec())) }),
            _ if coeffs.len() <= 1 => self.from_rational(&coeffs.first().cloned().unwrap_or_else(BigRational::zero)),
            _ => Err(Error::Parse(format!("{coeffs:?}"), format!("coefficient list needs a cyclotomic field, got {self}"))),
        }
    }

    /// A primitive n-th root of unity, when the field contains one.
    pub fn primitive_root_of_unity(&self, n: u32) -> Option<Scalar> {
        if n == 0 {
            return None;
        }
        match self {
            Field::Rationals => match n {
                1 => Some(self.one()),
                2 => Some(self.from_int(-1)),
                _ => None,
            },
            Field::Prime(p) => {
                let p = *p;
                if (p - 1) % n as u64 != 0 {
                    return None;
                }
                let g = (1..p).find(|&g| is_generator(g, p))?;
                Some(Scalar { field: self.clone(), repr: Repr::Mod(pow_mod(g, (p - 1) / n as u64, p)) })
            }
            Field::Cyclotomic(c) => {
                let m = c.order;
                let zeta = self.zeta();
                if m % n == 0 {
                    Some(zeta.pow(m / n))
                } else if m % 2 == 1 && (2 * m) % n == 0 {
                    Some((-zeta).pow(2 * m / n))
                } else {
                    None
                }
            }
        }
    }

    /// The generator `zeta_n = x` of a cyclotomic field (and 1 otherwise).
    pub fn zeta(&self) -> Scalar {
        match self {
            Field::Cyclotomic(c) => {
                let mut v = vec![BigRational::zero(); 2];
                v[1] = BigRational::one();
                Scalar { field: self.clone(), repr: Repr::Cyc(reduce_cyclo(c, v)) }
            }
            _ => self.one(),
        }
    }

    /// Every root of unity in the field (finite list).
    pub fn roots_of_unity(&self) -> Vec<Scalar> {
        match self {
            Field::Rationals => vec![self.one(), self.from_int(-1)],
            Field::Prime(p) => (1..*p).map(|r| Scalar { field: self.clone(), repr: Repr::Mod(r) }).collect(),
            Field::Cyclotomic(c) => {
                let m = if c.order % 2 == 0 { c.order } else { 2 * c.order };
                let w = self.primitive_root_of_unity(m).expect("Q(zeta_n) has the 2n-th roots when n is odd");
                let mut out = Vec::with_capacity(m as usize);
                let mut cur = self.one();
                for _ in 0..m {
                    out.push(cur.clone());
                    cur = &cur * &w;
                }
                out
            }
        }
    }

    /// Parses the text form: `p/q` or an integer for Q and cyclotomic
    /// constants, a decimal residue (or any rational) for `F_p`, and a
    /// bracketed coefficient list `[a0, a1, ...]` for cyclotomic elements.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .map(|c| parse_rational(c.trim().trim_matches('"')))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coefficients(&coeffs);
        }
        let q = parse_rational(t)?;
        self.from_rational(&q).map_err(|e| Error::Parse(text.into(), e.to_string()))
    }

    /// Accepts a JSON string, integer, or array of rationals.
    pub fn scalar_from_json(&self, v: &Value) -> Result<Scalar> {
        match v {
            Value::String(s) => self.parse_scalar(s),
            Value::Number(n) => {
                let i = n.as_i64().ok_or_else(|| Error::Parse(n.to_string(), "expected an integer".into()))?;
                Ok(self.from_int(i))
            }
            Value::Array(items) => {
                let coeffs = items
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => parse_rational(s),
                        Value::Number(n) => n
                            .as_i64()
                            .map(|i| BigRational::from_integer(i.into()))
                            .ok_or_else(|| Error::Parse(n.to_string(), "expected an integer".into())),
                        other => Err(Error::Parse(other.to_string(), "expected rational coefficient".into())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                self.from_coefficients(&coeffs)
            }
            other => Err(Error::Parse(other.to_string(), "expected a scalar".into())),
        }
    }
}

pub(crate) fn parse_rational(t: &str) -> Result<BigRational> {
    let err = |m: &str| Error::Parse(t.to_string(), m.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_generator(g: u64, p: u64) -> bool {
    let n = p - 1;
    poly::prime_factors(&BigInt::from(n))
        .iter()
        .all(|q| pow_mod(g, n / q.to_u64().expect("fits"), p) != 1)
}

fn reduce_cyclo(c: &Cyclotomic, mut v: Vec<BigRational>) -> Vec<BigRational> {
    let d = c.degree();
    if v.len() > d {
        let (_, r) = poly::divrem_rat(&v, &c.modulus_rat);
        v = r;
    }
    v.resize(d, BigRational::zero());
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
    Cyc(Vec<BigRational>),
}

/// An element of a [`Field`] in canonical form: a reduced fraction, a residue
/// in `[0, p)`, or a polynomial in `zeta_n` of degree below `phi(n)`.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.repr == other.repr
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod(r) => *r == 0,
            Repr::Cyc(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// The value as a rational number, when it lies in Q (never for `F_p`).
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.repr {
            Repr::Rat(q) => Some(q.clone()),
            Repr::Mod(_) => None,
            Repr::Cyc(v) => v[1..].iter().all(Zero::is_zero).then(|| v[0].clone()),
        }
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Residue in `[0, p)` for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(r) => Some(*r),
            _ => None,
        }
    }

    /// Power-basis coefficients (length 1 for Q and `F_p` is not offered).
    pub fn coefficients(&self) -> Option<&[BigRational]> {
        match &self.repr {
            Repr::Cyc(v) => Some(v),
            _ => None,
        }
    }

    /// True iff every power-basis coefficient is an integer, i.e. the element
    /// lies in `Z[zeta_n]` (resp. Z). Prime-field elements are always integral.
    pub fn has_integral_coefficients(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_integer(),
            Repr::Mod(_) => true,
            Repr::Cyc(v) => v.iter().all(BigRational::is_integer),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match (&self.field, &self.repr) {
            (_, Repr::Rat(q)) => Repr::Rat(q.recip()),
            (Field::Prime(p), Repr::Mod(r)) => Repr::Mod(inv_mod(*r, *p)),
            (Field::Cyclotomic(c), Repr::Cyc(v)) => {
                let inv = poly::inverse_mod_rat(v, &c.modulus_rat).ok_or(Error::DivisionByZero)?;
                Repr::Cyc(reduce_cyclo(c, inv))
            }
            _ => unreachable!("representation matches field"),
        };
        Ok(Scalar { field: self.field.clone(), repr })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.assert_same_field(other);
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// JSON form: a string for Q and `F_p`, an array of rational strings for
    /// cyclotomic fields.
    pub fn to_json(&self) -> Value {
        match &self.repr {
            Repr::Rat(q) => Value::String(fmt_rational(q)),
            Repr::Mod(r) => Value::String(r.to_string()),
            Repr::Cyc(v) => Value::Array(v.iter().map(|c| Value::String(fmt_rational(c))).collect()),
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert!(self.field == other.field, "mixed fields {} and {}", self.field, other.field);
    }

    /// Matrix of multiplication by `self` on the power basis of `Q(zeta_n)`
    /// over Q (the 1x1 matrix `[self]` otherwise). Used for norm and
    /// integrality checks of cyclotomic values.
    pub fn regular_matrix_over_prime_field(&self) -> Vec<Vec<BigRational>> {
        match (&self.field, &self.repr) {
            (Field::Cyclotomic(c), Repr::Cyc(_)) => {
                let d = c.degree();
                let mut cols = Vec::with_capacity(d);
                let mut basis = vec![BigRational::zero(); d];
                for k in 0..d {
                    basis.iter_mut().for_each(|b| *b = BigRational::zero());
                    basis[k] = BigRational::one();
                    let e = Scalar { field: self.field.clone(), repr: Repr::Cyc(basis.clone()) };
                    let prod = self * &e;
                    cols.push(prod.coefficients().expect("cyclotomic").to_vec());
                }
                (0..d).map(|r| (0..d).map(|k| cols[k][r].clone()).collect()).collect()
            }
            (_, Repr::Rat(q)) => vec![vec![q.clone()]],
            _ => Vec::new(),
        }
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(q) => write!(f, "{}", fmt_rational(q)),
            Repr::Mod(r) => write!(f, "{r}"),
            Repr::Cyc(v) => {
                let parts: Vec<String> = v.iter().map(fmt_rational).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

fn add_repr(field: &Field, a: &Repr, b: &Repr, negate_b: bool) -> Repr {
    match (field, a, b) {
        (_, Repr::Rat(x), Repr::Rat(y)) => Repr::Rat(if negate_b { x - y } else { x + y }),
        (Field::Prime(p), Repr::Mod(x), Repr::Mod(y)) => {
            let y = if negate_b { (p - y) % p } else { *y };
            Repr::Mod(((*x as u128 + y as u128) % *p as u128) as u64)
        }
        (_, Repr::Cyc(x), Repr::Cyc(y)) => Repr::Cyc(
            x.iter().zip(y).map(|(s, t)| if negate_b { s - t } else { s + t }).collect(),
        ),
        _ => unreachable!("representation matches field"),
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        Scalar { field: self.field.clone(), repr: add_repr(&self.field, &self.repr, &rhs.repr, false) }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        Scalar { field: self.field.clone(), repr: add_repr(&self.field, &self.repr, &rhs.repr, true) }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same_field(rhs);
        let repr = match (&self.field, &self.repr, &rhs.repr) {
            (_, Repr::Rat(x), Repr::Rat(y)) => Repr::Rat(x * y),
            (Field::Prime(p), Repr::Mod(x), Repr::Mod(y)) => Repr::Mod(mul_mod(*x, *y, *p)),
            (Field::Cyclotomic(c), Repr::Cyc(x), Repr::Cyc(y)) => {
                if rhs.as_rational().is_some() {
                    let k = &y[0];
                    Repr::Cyc(x.iter().map(|t| t * k).collect())
                } else if self.as_rational().is_some() {
                    let k = &x[0];
                    Repr::Cyc(y.iter().map(|t| t * k).collect())
                } else {
                    Repr::Cyc(reduce_cyclo(c, poly::mul_rat(x, y)))
                }
            }
            _ => unreachable!("representation matches field"),
        };
        Scalar { field: self.field.clone(), repr }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        &self.field.zero() - self
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Scalar {
    /// `self += a * b` without intermediate clones on the fast paths.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = &*self + &(a * b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_roundtrip() {
        let q = Field::rationals();
        let a = q.parse_scalar("-6/4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(q.parse_scalar("5").unwrap().to_string(), "5");
        assert!(q.parse_scalar("1/0").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_int(3);
        assert_eq!((&a * &a.inv().unwrap()), f.one());
        assert_eq!(f.from_int(-1).residue(), Some(6));
        assert_eq!(f.parse_scalar("1/2").unwrap().residue(), Some(4));
        assert!(Field::prime(9).is_err());
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn cyclotomic_zeta_relations() {
        for n in 1..=12u32 {
            let f = Field::cyclotomic(n).unwrap();
            let z = f.zeta();
            assert!(z.pow(n).is_one(), "zeta_{n}^{n} != 1");
            // Phi_n(zeta) = 0
            let Field::Cyclotomic(c) = &f else { unreachable!() };
            let mut acc = f.zero();
            for (k, coeff) in c.modulus().iter().enumerate() {
                acc = &acc + &(&f.from_bigint(coeff) * &z.pow(k as u32));
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
        }
    }

    #[test]
    fn cyclotomic_inverse() {
        let f = Field::cyclotomic(5).unwrap();
        let a = &f.zeta() + &f.from_int(2);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(f.primitive_root_of_unity(10).unwrap().pow(5), f.from_int(-1));
        assert_eq!(f.roots_of_unity().len(), 10);
    }

    #[test]
    fn scalar_json_forms() {
        let f = Field::cyclotomic(4).unwrap();
        let i = f.zeta();
        assert_eq!(i.to_json(), serde_json::json!(["0", "1"]));
        assert_eq!(f.scalar_from_json(&serde_json::json!(["0", "1"])).unwrap(), i);
        assert_eq!(f.parse_scalar("[0,0,1]").unwrap(), f.from_int(-1));
        assert_eq!(Field::rationals().from_rational(&BigRational::new(1.into(), 2.into())).unwrap().to_json(), serde_json::json!("1/2"));
    }
}
