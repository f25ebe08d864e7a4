//! Dense matrices over an exact [`Field`] with deterministic Gaussian
//! elimination (first nonzero pivot in each column).

use std::fmt;
use std::ops::Mul;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for s in row {
                check_field(field, &s)?;
                data.push(s);
            }
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data })
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::ShapeMismatch(format!("column {j} has length {} not {rows}", col.len())));
            }
            for (i, s) in col.iter().enumerate() {
                check_field(field, s)?;
                m.data[i * m.cols + j] = s.clone();
            }
        }
        Ok(m)
    }

    /// Integer entries, for tests and constructors.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Matrix::from_rows(field, rows).expect("well-formed integer rows")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(v.field() == &self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    acc.add_mul(self.get(i, j), x);
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        (0..self.cols)
            .map(|j| {
                let mut acc = self.field.zero();
                for (i, x) in v.iter().enumerate() {
                    acc.add_mul(x, self.get(i, j));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; row index of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.field, self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// If the matrix is `s * I`, returns `s`.
    pub fn scalar_value(&self) -> Option<Scalar> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(self.field.zero());
        }
        let s = self.get(0, 0).clone();
        (*self == Matrix::identity(&self.field, self.rows).scale(&s)).then_some(s)
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(field: &Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pr = m.get(r, j);
                    if pr.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * pr);
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = self.field.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Some(inv)
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.data[i * n + j] = v;
                }
            }
        }
        Ok(det)
    }

    /// The pivot columns of the matrix, i.e. a basis of the column space
    /// drawn from the original columns.
    pub fn column_space_basis(&self) -> Vec<Vec<Scalar>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|j| self.column(j)).collect()
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shapes")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn check_field(field: &Field, s: &Scalar) -> Result<()> {
    if s.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
    }
    Ok(())
}

/// One solution of `A x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != a.rows {
        return Err(Error::ShapeMismatch(format!("rhs length {} for {} rows", b.len(), a.rows)));
    }
    for s in b {
        check_field(&a.field, s)?;
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(&a.field, a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug.data[i * (n + 1) + j] = a.get(i, j).clone();
        }
        aug.data[i * (n + 1) + n] = b[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![a.field.zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = r.get(row, n).clone();
    }
    Ok(Some(x))
}

/// Basis of the null space, one vector per free column in increasing order.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = a.rref();
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..a.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![a.field.zero(); a.cols];
        v[f] = a.field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, f);
        }
        basis.push(v);
    }
    basis
}

/// Monic characteristic polynomial `det(xI - A)`, lowest degree first.
///
/// Uses Berkowitz's division-free recurrence, so it is valid over every
/// field including small prime fields.
pub fn char_poly(a: &Matrix) -> Result<Vec<Scalar>> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows, a.cols));
    }
    let f = &a.field;
    let n = a.rows;
    if n == 0 {
        return Ok(vec![f.one()]);
    }
    // coefficients highest degree first while iterating
    let mut c = vec![f.one(), -a.get(0, 0)];
    for r in 1..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(f.one());
        t.push(-a.get(r, r));
        // w = M^k S for the leading r x r block M and column S
        let mut w: Vec<Scalar> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for k in 2..=r + 1 {
            if k > 2 {
                w = (0..r)
                    .map(|i| {
                        let mut acc = f.zero();
                        for (j, wj) in w.iter().enumerate() {
                            acc.add_mul(a.get(i, j), wj);
                        }
                        acc
                    })
                    .collect();
            }
            let mut dot = f.zero();
            for (j, wj) in w.iter().enumerate() {
                dot.add_mul(a.get(r, j), wj);
            }
            t.push(-dot);
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = f.zero();
            for j in 0..=i.min(r) {
                acc.add_mul(&t[i - j], &c[j]);
            }
            next.push(acc);
        }
        c = next;
    }
    c.reverse();
    Ok(c)
}

/// Evaluates a polynomial (lowest degree first) at a square matrix.
pub fn eval_poly_at_matrix(p: &[Scalar], a: &Matrix) -> Matrix {
    let mut acc = Matrix::zeros(&a.field, a.rows, a.cols);
    for c in p.iter().rev() {
        acc = (&acc * a).add(&Matrix::identity(&a.field, a.rows).scale(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn ints(f: &Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let f = q();
        let x = solve_linear(&Matrix::identity(&f, 2), &ints(&f, &[3, 5])).unwrap();
        assert_eq!(x, Some(ints(&f, &[3, 5])));
    }

    #[test]
    fn solve_inconsistent() {
        let f = q();
        let a = Matrix::from_ints(&f, &[&[1, 1], &[2, 2]]);
        assert_eq!(solve_linear(&a, &ints(&f, &[1, 3])).unwrap(), None);
    }

    #[test]
    fn solve_over_f3() {
        let f = Field::prime(3).unwrap();
        let a = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let x = solve_linear(&a, &ints(&f, &[0, 2])).unwrap().unwrap();
        assert_eq!(x, ints(&f, &[1, 2]));
        assert_eq!(a.mul_vec(&x), ints(&f, &[0, 2]));
    }

    #[test]
    fn solve_shape_and_field_errors() {
        let f = q();
        let a = Matrix::identity(&f, 2);
        assert!(matches!(solve_linear(&a, &ints(&f, &[1])), Err(Error::ShapeMismatch(_))));
        let g = Field::prime(5).unwrap();
        assert!(matches!(solve_linear(&a, &ints(&g, &[1, 1])), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn kernels() {
        let f = q();
        assert!(kernel_basis(&Matrix::identity(&f, 3)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(&f, 2, 2)), vec![ints(&f, &[1, 0]), ints(&f, &[0, 1])]);
        let a = Matrix::from_ints(&f, &[&[1, 2]]);
        assert_eq!(kernel_basis(&a), vec![ints(&f, &[-2, 1])]);
    }

    #[test]
    fn char_polys() {
        let f = q();
        assert_eq!(char_poly(&Matrix::identity(&f, 2)).unwrap(), ints(&f, &[1, -2, 1]));
        let swap = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&swap).unwrap(), ints(&f, &[-1, 0, 1]));
        let d = Matrix::from_ints(&f, &[&[6, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(char_poly(&d).unwrap(), ints(&f, &[-36, 36, -11, 1]));
        assert!(matches!(char_poly(&Matrix::zeros(&f, 2, 3)), Err(Error::NotSquare(2, 3))));
    }

    #[test]
    fn inverse_and_det() {
        let f = q();
        let a = Matrix::from_ints(&f, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(a.det().unwrap(), f.one());
        assert!(Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_shape() {
        let f = q();
        let a = Matrix::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let k = a.kron(&Matrix::identity(&f, 2));
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(2, 0), &f.from_int(3));
        assert_eq!(k.trace(), f.from_int(10));
    }
}
