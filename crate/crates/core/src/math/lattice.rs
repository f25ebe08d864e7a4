//! Integer lattices in row Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A sublattice of `Z^d` stored in row Hermite normal form: rows are
/// linearly independent, pivots strictly increase and are positive, and the
/// entries above each pivot lie in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntLattice {
    pub fn from_generators(dim: usize, generators: &[Vec<BigInt>]) -> Result<IntLattice> {
        let mut rows = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != dim {
                return Err(Error::ShapeMismatch(format!("generator of length {} in Z^{dim}", g.len())));
            }
            if g.iter().any(|x| !x.is_zero()) {
                rows.push(g.clone());
            }
        }
        Ok(IntLattice { dim, rows: hermite(rows, dim) })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    fn pivot(row: &[BigInt]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("HNF rows are nonzero")
    }

    /// Rational coordinates of `v` against the HNF rows, if `v` lies in
    /// their rational span.
    fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigRational>> {
        let mut rest: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
        let mut coords = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let c = IntLattice::pivot(row);
            let x = &rest[c] / BigRational::from_integer(row[c].clone());
            if !x.is_zero() {
                for (r, b) in rest.iter_mut().zip(row) {
                    *r -= &x * BigRational::from_integer(b.clone());
                }
            }
            coords.push(x);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        v.len() == self.dim && self.coordinates(v).is_some_and(|x| x.iter().all(BigRational::is_integer))
    }
}

fn hermite(mut rows: Vec<Vec<BigInt>>, dim: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0;
    for col in 0..dim {
        if r == rows.len() {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below row r
            let best = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][col].is_zero() {
            if rows[r][col].is_negative() {
                rows[r].iter_mut().for_each(|x| *x = -&*x);
            }
            let pivot_row = rows[r].clone();
            for above in rows.iter_mut().take(r) {
                let q = above[col].div_floor(&pivot_row[col]);
                if !q.is_zero() {
                    for (x, p) in above.iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows
}

/// Least positive `d` with `d * v` in `L`, or 0 when the line `Z v` meets
/// `L` only in zero.
pub fn lattice_meet_line(lattice: &IntLattice, v: &[BigInt]) -> Result<BigInt> {
    if v.len() != lattice.dim {
        return Err(Error::ShapeMismatch(format!("vector of length {} in Z^{}", v.len(), lattice.dim)));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let Some(coords) = lattice.coordinates(v) else {
        return Ok(BigInt::zero());
    };
    Ok(coords.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lattice(dim: usize, gens: &[&[i64]]) -> IntLattice {
        IntLattice::from_generators(dim, &gens.iter().map(|g| ints(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn meets() {
        let l = lattice(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(lattice_meet_line(&l, &ints(&[1, 0])).unwrap(), BigInt::from(2));
        let l = lattice(2, &[&[1, 1]]);
        assert_eq!(lattice_meet_line(&l, &ints(&[1, 0])).unwrap(), BigInt::zero());
        let l = lattice(3, &[&[6, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(lattice_meet_line(&l, &ints(&[1, 0, 0])).unwrap(), BigInt::from(6));
    }

    #[test]
    fn meet_errors() {
        let l = lattice(2, &[&[1, 0]]);
        assert_eq!(lattice_meet_line(&l, &ints(&[0, 0])), Err(Error::ZeroVector));
        assert!(matches!(lattice_meet_line(&l, &ints(&[1])), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn hnf_shape() {
        let l = lattice(2, &[&[4, 6], &[6, 4], &[0, 0]]);
        assert_eq!(l.rows(), &[ints(&[2, 8]), ints(&[0, 10])]);
        assert!(l.contains(&ints(&[4, 6])));
        assert!(!l.contains(&ints(&[2, 0])));
    }
}
