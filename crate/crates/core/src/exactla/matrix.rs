//! Dense exact matrices and vector helpers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use super::echelon::{self, Echelon, Strategy};
use super::scalar::Scalar;
use super::subspace::Subspace;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_from_i64(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Row-major dense matrix of scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Like [`Matrix::from_rows`] but keeps the column count for empty input.
    pub fn from_rows_with_cols(rows: Vec<Vector>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_cols(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| vec_from_i64(r)).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale(c, &self.data),
        }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form; dense fraction-free elimination for small
    /// matrices, sparse elimination above 64x64.
    pub fn echelon(&self) -> Echelon {
        echelon::reduce(self, Strategy::Auto)
    }

    pub fn echelon_with(&self, strategy: Strategy) -> Echelon {
        echelon::reduce(self, strategy)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// `{v : self * v = 0}` in canonical basis.
    pub fn kernel(&self) -> Subspace {
        self.echelon().kernel()
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_spanning(self.rows, self.transpose().to_rows())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_echelon(self.echelon())
    }

    /// Inverse of a square matrix, if it is nonsingular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let ech = aug.echelon();
        if ech.rank() < n || ech.pivots()[..n] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| ech.rows()[i][n + j].clone()))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        echelon::determinant(self)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", x)?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Outcome of a consistent linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub particular: Vector,
    pub kernel: Subspace,
}

/// Solves `m * x = b`. `None` when `b` is outside the column span.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<SolveResult> {
    assert_eq!(b.len(), m.rows(), "rhs length must equal row count");
    let n = m.cols();
    let aug = m.hstack(&Matrix::from_cols(m.rows(), &[b.to_vec()]));
    let ech = aug.echelon();
    if ech.pivots().last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
        x[p] = row[n].clone();
    }
    Some(SolveResult {
        particular: x,
        kernel: m.kernel(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::q;
    use alloc::vec;

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(Matrix::zeros(3, 3).kernel().dim(), 3);
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn kernel_hand_example() {
        let m = Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec_from_i64(&[1, -1, 0]));
        for v in k.basis() {
            assert!(is_zero_vector(&m.mul_vec(v)));
        }
    }

    #[test]
    fn solve_examples() {
        let b = vec_from_i64(&[4, -1, 7]);
        let r = solve(&Matrix::identity(3), &b).unwrap();
        assert_eq!(r.particular, b);
        assert_eq!(r.kernel.dim(), 0);

        let r = solve(&Matrix::from_i64(&[&[2]]), &vec_from_i64(&[3])).unwrap();
        assert_eq!(r.particular, vec![q(3, 2)]);

        assert!(solve(&Matrix::from_i64(&[&[1, 0], &[1, 0]]), &vec_from_i64(&[1, 2])).is_none());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.determinant(), Scalar::one());
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(
            Matrix::from_i64(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]).determinant(),
            Scalar::from_int(-3)
        );
    }
}
