//! Coordinates on traceless `k × k` matrices.
//!
//! Basis order: the off-diagonal units `E_ij` (`i ≠ j`, lexicographic), then
//! `H_i = E_ii − E_{i+1,i+1}` for `i = 1..k−1`.

use alloc::vec::Vec;

use crate::exactla::{zero_vector, Matrix, Scalar, Vector};

pub fn dim(k: usize) -> usize {
    k * k - 1
}

pub fn unit(k: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(k, k);
    m[(i, j)] = Scalar::one();
    m
}

fn off_diagonal(k: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(k * (k - 1));
    for i in 0..k {
        for j in 0..k {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

pub fn basis_matrix(k: usize, idx: usize) -> Matrix {
    let off = off_diagonal(k);
    if idx < off.len() {
        let (i, j) = off[idx];
        unit(k, i, j)
    } else {
        let i = idx - off.len();
        let mut m = unit(k, i, i);
        m[(i + 1, i + 1)] = Scalar::from_int(-1);
        m
    }
}

pub fn from_coords(k: usize, c: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(k, k);
    let off = off_diagonal(k);
    for (x, &(i, j)) in c.iter().zip(&off) {
        m[(i, j)] = x.clone();
    }
    for (h, x) in c[off.len()..].iter().enumerate() {
        m[(h, h)] += x;
        m[(h + 1, h + 1)] -= x;
    }
    m
}

/// Coordinates of a traceless matrix. Panics on nonzero trace.
pub fn coords(m: &Matrix) -> Vector {
    let k = m.rows();
    assert!(m.trace().is_zero(), "matrix is not traceless");
    let off = off_diagonal(k);
    let mut c = zero_vector(dim(k));
    for (idx, &(i, j)) in off.iter().enumerate() {
        c[idx] = m[(i, j)].clone();
    }
    // H-coefficients are the partial sums of the diagonal
    let mut acc = Scalar::zero();
    for h in 0..k - 1 {
        acc += &m[(h, h)];
        c[off.len() + h] = acc.clone();
    }
    c
}

/// Matrix of `A ↦ [X, A]` on the traceless basis.
pub fn ad(x: &Matrix) -> Matrix {
    let k = x.rows();
    let cols: Vec<Vector> = (0..dim(k))
        .map(|idx| coords(&x.commutator(&basis_matrix(k, idx))))
        .collect();
    Matrix::from_cols(dim(k), &cols)
}

/// `e_1..e_{k−1}` then `f_1..f_{k−1}` as `k × k` matrices.
pub fn chevalley_generators(k: usize) -> Vec<Matrix> {
    let mut v: Vec<Matrix> = (0..k - 1).map(|i| unit(k, i, i + 1)).collect();
    v.extend((0..k - 1).map(|i| unit(k, i + 1, i)));
    v
}
