use alloc::vec::Vec;

use super::matrix::{axpy, is_zero_vector, zero_vector, Matrix, Vector};
use super::scalar::Scalar;

/// A bilinear map `K^left × K^right → K^out`, stored as the image of every
/// basis pair `(a, b)` at index `a * right + b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bilinear {
    left: usize,
    right: usize,
    out: usize,
    images: Vec<Vector>,
}

impl Bilinear {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Bilinear {
            left,
            right,
            out,
            images: (0..left * right).map(|_| zero_vector(out)).collect(),
        }
    }

    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut images = Vec::with_capacity(left * right);
        for a in 0..left {
            for b in 0..right {
                let v = f(a, b);
                assert_eq!(v.len(), out, "image has wrong length");
                images.push(v);
            }
        }
        Bilinear {
            left,
            right,
            out,
            images,
        }
    }

    /// Columns of `m` are the images of the lexicographically ordered pairs.
    pub fn from_matrix(left: usize, right: usize, m: &Matrix) -> Self {
        assert_eq!(m.cols(), left * right);
        Bilinear::from_fn(left, right, m.rows(), |a, b| m.col(a * right + b))
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn out(&self) -> usize {
        self.out
    }

    pub fn image(&self, a: usize, b: usize) -> &[Scalar] {
        &self.images[a * self.right + b]
    }

    pub fn image_mut(&mut self, a: usize, b: usize) -> &mut Vector {
        &mut self.images[a * self.right + b]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| is_zero_vector(v))
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.left);
        assert_eq!(y.len(), self.right);
        let mut acc = zero_vector(self.out);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                axpy(&mut acc, &(xa * yb), self.image(a, b));
            }
        }
        acc
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_cols(self.out, &self.images)
    }

    pub fn add(&self, other: &Bilinear) -> Bilinear {
        assert_eq!((self.left, self.right, self.out), (other.left, other.right, other.out));
        Bilinear::from_fn(self.left, self.right, self.out, |a, b| {
            super::matrix::add(self.image(a, b), other.image(a, b))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Bilinear {
        Bilinear::from_fn(self.left, self.right, self.out, |a, b| {
            super::matrix::scale(c, self.image(a, b))
        })
    }

    /// `(b, a) ↦ self(a, b)`
    pub fn swapped(&self) -> Bilinear {
        Bilinear::from_fn(self.right, self.left, self.out, |b, a| self.image(a, b).to_vec())
    }

    /// `(a, b) ↦ post · self(pre_l a, pre_r b)` on the new bases.
    pub fn transform(&self, pre_l: &Matrix, pre_r: &Matrix, post: &Matrix) -> Bilinear {
        assert_eq!(pre_l.rows(), self.left);
        assert_eq!(pre_r.rows(), self.right);
        assert_eq!(post.cols(), self.out);
        let (nl, nr) = (pre_l.cols(), pre_r.cols());
        // contract the left slot first: half[a][j] = self(pre_l e_a, e_j)
        let mut half: Vec<Vector> = Vec::with_capacity(nl * self.right);
        for a in 0..nl {
            for j in 0..self.right {
                let mut acc = zero_vector(self.out);
                for i in 0..self.left {
                    axpy(&mut acc, &pre_l[(i, a)], self.image(i, j));
                }
                half.push(acc);
            }
        }
        Bilinear::from_fn(nl, nr, post.rows(), |a, b| {
            let mut acc = zero_vector(self.out);
            for j in 0..self.right {
                axpy(&mut acc, &pre_r[(j, b)], &half[a * self.right + j]);
            }
            post.mul_vec(&acc)
        })
    }
}
