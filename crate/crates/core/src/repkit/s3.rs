//! The symmetric group on three letters.
//!
//! Elements are listed as `(), (12), (23), (13), (123), (132)`. With `s = (12)`
//! and `t = (123)`, composing right to left, these are `1, s, st, ts, t, t²`.

use alloc::vec::Vec;

use crate::exactla::{Matrix, Scalar};

use super::irrep::S3Label;

/// A permutation of `{0, 1, 2}` as its image array.
pub type Perm = [usize; 3];

pub const ELEMENTS: [Perm; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

pub const NAMES: [&str; 6] = ["()", "(12)", "(23)", "(13)", "(123)", "(132)"];

/// Index of the inverse of each element.
pub const INVERSE: [usize; 6] = [0, 1, 2, 3, 5, 4];

/// `(p ∘ q)(x) = p(q(x))`
pub fn compose(p: Perm, q: Perm) -> Perm {
    [p[q[0]], p[q[1]], p[q[2]]]
}

pub fn index_of(p: Perm) -> usize {
    ELEMENTS.iter().position(|&e| e == p).expect("not a permutation")
}

pub fn character(label: S3Label) -> [i64; 6] {
    match label {
        S3Label::Tr => [1, 1, 1, 1, 1, 1],
        S3Label::Sg => [1, -1, -1, -1, 1, 1],
        S3Label::Std => [2, 0, 0, 0, -1, -1],
    }
}

/// Matrices of all elements from those of `s = (12)` and `t = (123)`.
pub fn element_matrices(s: &Matrix, t: &Matrix) -> Vec<Matrix> {
    let id = Matrix::identity(s.rows());
    let t2 = t.mul(t);
    alloc::vec![id, s.clone(), s.mul(t), t.mul(s), t.clone(), t2]
}

/// The standard representation on `K^2` in the labeled basis `e_1, e_2`.
pub fn std_matrix(element: usize) -> Matrix {
    let rows: [[i64; 4]; 6] = [
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [1, 0, -1, -1],
        [-1, -1, 0, 1],
        [-1, -1, 1, 0],
        [0, 1, -1, -1],
    ];
    let r = rows[element];
    Matrix::from_i64(&[&[r[0], r[1]], &[r[2], r[3]]])
}

/// The regular module `K[S3]` under conjugation `g · x = g x g⁻¹`, on the
/// group basis. Returns the matrices of `(12)` and `(123)`.
pub fn conjugation_generators() -> (Matrix, Matrix) {
    let conj = |g: usize| {
        let gi = INVERSE[g];
        Matrix::from_fn(6, 6, |i, j| {
            let image = compose(compose(ELEMENTS[g], ELEMENTS[j]), ELEMENTS[gi]);
            if index_of(image) == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    };
    (conj(1), conj(4))
}
