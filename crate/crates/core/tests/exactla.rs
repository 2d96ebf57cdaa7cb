use gtable_core::exactla::Strategy as Elimination;
use gtable_core::exactla::{is_zero_vector, q, solve, vec_from_i64, Matrix, Scalar, SPARSE_THRESHOLD};
use proptest::prelude::*;

/// `det` by the permutation expansion.
fn leibniz(m: &Matrix) -> Scalar {
    fn go(m: &Matrix, row: usize, used: &mut Vec<bool>, sign: bool, acc: Scalar, out: &mut Scalar) {
        let n = m.rows();
        if row == n {
            *out += if sign { -acc } else { acc };
            return;
        }
        for c in 0..n {
            if used[c] || m[(row, c)].is_zero() {
                continue;
            }
            // columns already used to the right of `c` are inversions
            let flips = used[c + 1..].iter().filter(|&&u| u).count() % 2 == 1;
            used[c] = true;
            go(m, row + 1, used, sign ^ flips, &acc * &m[(row, c)], out);
            used[c] = false;
        }
    }
    let mut out = Scalar::zero();
    go(m, 0, &mut vec![false; m.rows()], false, Scalar::one(), &mut out);
    out
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn hilbert_inverse_has_the_closed_form() {
    for n in 1..=6i64 {
        let h = Matrix::from_fn(n as usize, n as usize, |i, j| q(1, (i + j + 1) as i64));
        let inv = h.inverse().unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let want = sign
                    * (i + j - 1)
                    * binom(n + i - 1, n - j)
                    * binom(n + j - 1, n - i)
                    * binom(i + j - 2, i - 1).pow(2);
                assert_eq!(
                    inv[((i - 1) as usize, (j - 1) as usize)],
                    Scalar::from_int(want),
                    "n={n} ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn vandermonde_determinant() {
    let xs = [q(1, 2), q(-1, 1), q(3, 1), q(2, 3), q(0, 1)];
    let m = Matrix::from_fn(5, 5, |i, j| xs[i].pow(j as u32));
    let mut want = Scalar::one();
    for j in 0..5 {
        for i in 0..j {
            want = &want * &(&xs[j] - &xs[i]);
        }
    }
    assert_eq!(m.determinant(), want);
}

#[test]
fn large_sparse_matrix_takes_the_sparse_path() {
    let n = SPARSE_THRESHOLD + 6;
    // a path graph Laplacian: rank n - 1, kernel spanned by the all-ones vector
    let m = Matrix::from_fn(n, n, |i, j| {
        let deg = if i == 0 || i == n - 1 { 1 } else { 2 };
        match i.abs_diff(j) {
            0 => Scalar::from_int(deg),
            1 => Scalar::from_int(-1),
            _ => Scalar::zero(),
        }
    });
    assert_eq!(m.echelon(), m.echelon_with(Elimination::Dense));
    assert_eq!(m.rank(), n - 1);
    assert_eq!(m.kernel().basis(), &[vec![Scalar::one(); n]]);
}

#[test]
fn solve_reports_inconsistent_systems() {
    let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
    assert!(solve(&m, &vec_from_i64(&[1, 3])).is_none());
    let r = solve(&m, &vec_from_i64(&[1, 2])).unwrap();
    assert_eq!(m.mul_vec(&r.particular), vec_from_i64(&[1, 2]));
    assert_eq!(r.kernel.dim(), 1);
}

#[test]
fn scalars_print_and_parse_as_fractions() {
    for (s, v) in [("3/4", q(3, 4)), ("-2", q(-2, 1)), ("0", q(0, 1)), ("-1/3", q(2, -6))] {
        assert_eq!(v.to_string(), s);
        assert_eq!(s.parse::<Scalar>().unwrap(), v);
    }
    assert!("1/0".parse::<Scalar>().is_err());
    assert!("x".parse::<Scalar>().is_err());
    assert_eq!(q(9, 4).sqrt_exact(), Some(q(3, 2)));
    assert_eq!(q(2, 1).sqrt_exact(), None);
}

fn small() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(a, b)| q(a, b))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(small(), c), r)
            .prop_map(move |rows| Matrix::from_rows_with_cols(rows, c))
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(small(), n), n)
            .prop_map(move |rows| Matrix::from_rows_with_cols(rows, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn determinant_matches_the_permutation_expansion(m in square(5)) {
        prop_assert_eq!(m.determinant(), leibniz(&m));
    }

    #[test]
    fn rank_nullity_and_kernel(m in matrix(7)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        prop_assert_eq!(m.transpose().rank(), m.rank());
        for v in k.basis() {
            prop_assert!(is_zero_vector(&m.mul_vec(v)));
        }
    }

    #[test]
    fn dense_and_sparse_agree(m in matrix(7)) {
        prop_assert_eq!(m.echelon_with(Elimination::Dense), m.echelon_with(Elimination::Sparse));
    }

    #[test]
    fn inverse_exists_iff_determinant_is_nonzero(m in square(5)) {
        match m.inverse() {
            Some(inv) => {
                prop_assert!(!m.determinant().is_zero());
                prop_assert_eq!(inv.mul(&m), Matrix::identity(m.rows()));
            }
            None => prop_assert!(m.determinant().is_zero()),
        }
    }

    #[test]
    fn subspace_membership(m in matrix(6), coeffs in proptest::collection::vec(small(), 6)) {
        let s = m.column_space();
        let combo = m.mul_vec(&coeffs[..m.cols()]);
        prop_assert!(s.contains(&combo));
        prop_assert!(is_zero_vector(&s.reduce(&combo)));
        prop_assert_eq!(s.dim(), m.rank());
    }
}
