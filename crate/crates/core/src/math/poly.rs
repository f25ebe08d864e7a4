//! Dense univariate polynomial helpers. Coefficient vectors are stored lowest
//! degree first and kept trimmed (no trailing zeros) unless noted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic divisor. Returns `(quotient, remainder)`.
pub(crate) fn divrem_monic_int(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    trim(&mut rem);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (t, d) in den.iter().enumerate() {
            rem[k + t] -= &c * d;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// The n-th cyclotomic polynomial, computed as (x^n - 1) divided by the
/// product of all Phi_d with d a proper divisor of n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut table: Vec<Option<Vec<BigInt>>> = vec![None; n as usize + 1];
    for m in 1..=n {
        if !n.is_multiple_of(m) {
            continue;
        }
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = -BigInt::one();
        num[m as usize] = BigInt::one();
        let mut den = vec![BigInt::one()];
        for d in 1..m {
            if m % d == 0 {
                den = mul_int(&den, table[d as usize].as_ref().expect("divisor computed"));
            }
        }
        let (q, r) = divrem_monic_int(&num, &den);
        assert!(r.is_empty(), "cyclotomic division must be exact");
        table[m as usize] = Some(q);
    }
    table[n as usize].take().expect("n divides n")
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

// ---- rational polynomials (used for inversion in Q(zeta_n)) ----

pub(crate) fn divrem_rat(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    assert!(!den.is_empty(), "polynomial division by zero");
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let lead = den[dd].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        for (t, d) in den.iter().enumerate() {
            rem[k + t] -= &c * d;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn mul_rat(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub_rat(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` in Q[x], when gcd(a, m) = 1.
pub(crate) fn inverse_mod_rat(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // extended Euclid tracking only the coefficient of `a`
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut t0, mut t1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem_rat(&r0, &r1);
        let t2 = sub_rat(&t0, &mul_rat(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Vec<BigRational> = t0.into_iter().map(|t| t / &c).collect();
    let (_, r) = divrem_rat(&inv, m);
    inv = r;
    Some(inv)
}

/// Prime factors of |n| in increasing order (without multiplicity).
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if m.is_multiple_of(&p) {
            out.push(p.clone());
            while m.is_multiple_of(&p) {
                m /= &p;
            }
        }
        p += 1;
    }
    if m > BigInt::one() {
        out.push(m);
    }
    out
}

/// All positive divisors of |n| (n nonzero), increasing.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let m = n.abs();
    let mut divs = vec![BigInt::one()];
    let mut rest = m.clone();
    for p in prime_factors(&m) {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for n in 1..=30 {
            assert_eq!(cyclotomic_polynomial(n).len() as u32 - 1, euler_phi(n));
        }
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(&BigInt::from(-36)), ints(&[1, 2, 3, 4, 6, 9, 12, 18, 36]));
        assert_eq!(prime_factors(&BigInt::from(9216)), ints(&[2, 3]));
        assert!(is_prime_u64(7919));
        assert!(!is_prime_u64(7917));
    }
}
