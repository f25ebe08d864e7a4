//! Integer root extraction for monic integer polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Scalar;
use super::poly::divisors;
use crate::error::{Error, Result};

/// Integer roots found by divisor trial, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerRoots {
    /// Roots in decreasing order, repeated according to multiplicity.
    pub roots: Vec<BigInt>,
    /// True iff the polynomial is the product of the found linear factors.
    pub complete: bool,
}

/// Integer roots of a monic integer polynomial given lowest degree first.
pub fn integer_roots(p: &[BigInt]) -> Result<IntegerRoots> {
    let mut q = p.to_vec();
    while q.last().is_some_and(Zero::is_zero) {
        q.pop();
    }
    if q.last().is_none_or(|c| !c.is_one()) {
        return Err(Error::NotMonicInteger);
    }
    let mut roots = Vec::new();
    while q.len() > 1 && q[0].is_zero() {
        q.remove(0);
        roots.push(BigInt::zero());
    }
    if q.len() > 1 {
        for d in divisors(&q[0]) {
            for r in [d.clone(), -d] {
                while q.len() > 1 {
                    let (quot, rem) = deflate(&q, &r);
                    if !rem.is_zero() {
                        break;
                    }
                    q = quot;
                    roots.push(r.clone());
                }
            }
            if q.len() == 1 {
                break;
            }
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    Ok(IntegerRoots { roots, complete: q.len() == 1 })
}

/// Same as [`integer_roots`] for a polynomial with scalar coefficients that
/// must all be rational integers.
pub fn integer_roots_of_scalars(p: &[Scalar]) -> Result<IntegerRoots> {
    let ints = p.iter().map(|c| c.as_integer().ok_or(Error::NotMonicInteger)).collect::<Result<Vec<_>>>()?;
    integer_roots(&ints)
}

/// Synthetic division by `x - r`.
fn deflate(p: &[BigInt], r: &BigInt) -> (Vec<BigInt>, BigInt) {
    let n = p.len() - 1;
    let mut quot = vec![BigInt::zero(); n];
    let mut acc = BigInt::zero();
    for k in (0..=n).rev() {
        acc = &acc * r + &p[k];
        if k > 0 {
            quot[k - 1] = acc.clone();
        }
    }
    (quot, acc)
}
