//! Row reduction.
//!
//! Both paths clear denominators row by row and eliminate over the integers,
//! then normalize to the reduced row echelon form over Q. Pivots are the first
//! nonzero entry in column order, so the output is fully deterministic and
//! (being the RREF) canonical for the row space.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;
use super::subspace::Subspace;

/// Above this size (in either dimension) the sparse path is used.
pub const SPARSE_THRESHOLD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Dense,
    Sparse,
}

/// Reduced row echelon form: nonzero rows only, each with leading 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    /// Null space of the reduced matrix. One basis vector per free column,
    /// with a 1 in that column.
    pub fn kernel(&self) -> Subspace {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, basis)
    }
}

pub fn reduce(m: &Matrix, strategy: Strategy) -> Echelon {
    let sparse = match strategy {
        Strategy::Auto => m.rows() > SPARSE_THRESHOLD || m.cols() > SPARSE_THRESHOLD,
        Strategy::Dense => false,
        Strategy::Sparse => true,
    };
    let (rows, pivots) = if sparse { sparse_forward(m) } else { bareiss_forward(m) };
    normalize(m.cols(), rows, pivots)
}

/// Determinant via fraction-free elimination.
pub fn determinant(m: &Matrix) -> Scalar {
    let n = m.rows();
    let (mut a, denom) = integer_rows(m);
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(t, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    let det = if sign < 0 { -det } else { det };
    Scalar::from_bigints(det, denom)
}

/// Clears denominators row by row. Returns integer rows and the product of
/// the row multipliers.
fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            total *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (rows, total)
}

fn exact_div(t: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return t;
    }
    let (q, r) = t.div_rem(d);
    debug_assert!(r.is_zero(), "Bareiss division must be exact");
    q
}

/// Bareiss forward elimination with row swaps only. Returns the integer
/// echelon rows (nonzero ones) and their pivot columns.
fn bareiss_forward(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let (mut a, _) = integer_rows(m);
    let rows = m.rows();
    let cols = m.cols();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                // still has to be rescaled to keep the Bareiss invariant
                for j in c + 1..cols {
                    if !a[i][j].is_zero() {
                        let t = &a[r][c] * &a[i][j];
                        a[i][j] = exact_div(t, &prev);
                    }
                }
                continue;
            }
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = exact_div(t, &prev);
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

type SparseRow = Vec<(usize, BigInt)>;

fn to_sparse_row(row: &[BigInt]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

fn primitive(row: &mut SparseRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn coeff_at(row: &SparseRow, c: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&c, |(j, _)| *j).ok().map(|k| &row[k].1)
}

/// `alpha * row - beta * pivot`, dropping zeros.
fn combine(alpha: &BigInt, row: &SparseRow, beta: &BigInt, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (col, val) = match (row.get(i), pivot.get(j)) {
            (Some((ci, xi)), Some((cj, xj))) if ci == cj => {
                i += 1;
                j += 1;
                (*ci, alpha * xi - beta * xj)
            }
            (Some((ci, xi)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, alpha * xi)
            }
            (Some((ci, xi)), None) => {
                i += 1;
                (*ci, alpha * xi)
            }
            (_, Some((cj, xj))) => {
                j += 1;
                (*cj, -(beta * xj))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// Fraction-free elimination on sparse integer rows with content removal.
fn sparse_forward(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let (dense, _) = integer_rows(m);
    let cols = m.cols();
    let mut pending: Vec<SparseRow> = dense
        .iter()
        .map(|r| {
            let mut s = to_sparse_row(r);
            primitive(&mut s);
            s
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut done: Vec<SparseRow> = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..cols {
        if pending.is_empty() {
            break;
        }
        let Some(p) = pending.iter().position(|r| coeff_at(r, c).is_some()) else {
            continue;
        };
        let pivot = pending.remove(p);
        let pv = coeff_at(&pivot, c).unwrap().clone();
        let mut next = Vec::with_capacity(pending.len());
        for row in pending.drain(..) {
            let reduced = match coeff_at(&row, c) {
                Some(a) => {
                    let g = pv.gcd(a);
                    let mut r = combine(&(&pv / &g), &row, &(a / &g), &pivot);
                    primitive(&mut r);
                    r
                }
                None => row,
            };
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        pending = next;
        done.push(pivot);
        pivots.push(c);
    }
    let rows = done
        .into_iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); cols];
            for (j, x) in r {
                d[j] = x;
            }
            d
        })
        .collect();
    (rows, pivots)
}

/// Turns integer echelon rows into the reduced row echelon form over Q.
fn normalize(cols: usize, rows: Vec<Vec<BigInt>>, pivots: Vec<usize>) -> Echelon {
    let mut out: Vec<Vector> = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter()
                .map(|x| {
                    if x.is_zero() {
                        Scalar::zero()
                    } else {
                        Scalar::from_bigints(x, lead.clone())
                    }
                })
                .collect()
        })
        .collect();
    for k in (0..out.len()).rev() {
        let p = pivots[k];
        let (above, rest) = out.split_at_mut(k);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..cols {
                if !pivot_row[j].is_zero() {
                    let t = &f * &pivot_row[j];
                    row[j] -= t;
                }
            }
        }
    }
    Echelon {
        cols,
        rows: out,
        pivots,
    }
}
