use gtable_core::exactla::{q, unit_vector, Bilinear, Scalar};
use gtable_core::gallery::*;
use gtable_core::gtable::{assemble, check_morphism, expand, expand_in_module, extract_algebra, GMatrix};
use gtable_core::repkit::{decompose_standard, Decomposition, Labeling};

const H000: usize = 0;
const H011: usize = 1;
const H211: usize = 2;
const H120: usize = 3;
const H102: usize = 4;
const H022: usize = 5;
const H222: usize = 6;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Sum over cyclic permutations of `((x y) z)` on basis triples.
fn jacobi_holds(b: &Bilinear) -> bool {
    let n = b.left();
    let e = |i| unit_vector(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let t1 = b.eval(&b.eval(&e(i), &e(j)), &e(k));
                let t2 = b.eval(&b.eval(&e(j), &e(k)), &e(i));
                let t3 = b.eval(&b.eval(&e(k), &e(i)), &e(j));
                if (0..n).any(|c| !(t1[c].clone() + t2[c].clone() + t3[c].clone()).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn s3_tables_match() {
    compare("s3", &s3_table().unwrap(), &s3_fixture()).unwrap();
    let co = s3_cotable().unwrap();
    compare("s3 cotable", &co, &s3_cotable_fixture()).unwrap();
    // 1_3 · 1_3 in the cotable
    assert_eq!(co.coeff(2, 2, 0, 1), q(2, 3));
    assert_eq!(co.coeff(2, 2, 1, 1), q(2, 3));
    assert_eq!(co.coeff(2, 2, 2, 1), q(1, 3));
}

#[test]
fn matrix_algebra_traceless_cell() {
    for k in 2..=5u32 {
        let t = mk_table(k).unwrap();
        compare("M_k", &t, &mk_fixture(k)).unwrap();
        assert_eq!(t.coeff(1, 1, 0, 1), q(1, k as i64));
        assert_eq!(t.coeff(1, 1, 1, 1), q(1, 2));
        let m2 = if k == 2 { Scalar::zero() } else { q(1, 2) };
        assert_eq!(t.coeff(1, 1, 1, 2), m2);
        assert_eq!(t.cell(1, 1).len(), if k == 2 { 2 } else { 3 });
    }
}

#[test]
fn sl3_table_matches_the_corrected_fixture() {
    let t = sl3_table().unwrap();
    compare("sl3", &t, &sl3_fixture()).unwrap();
    // V1 · V1' = −½ V2 − ½ V0
    assert_eq!(t.coeff(2, 3, 1, 1), q(-1, 2));
    assert_eq!(t.coeff(2, 3, 0, 1), q(-1, 2));
    assert!(jacobi_holds(&expand(&t, &Labeling::sl2_first()).unwrap()));
}

#[test]
fn printed_sl3_table_is_not_a_lie_algebra() {
    let printed = sl3_printed_fixture();
    assert!(!jacobi_holds(&expand(&printed, &Labeling::sl2_first()).unwrap()));
    let diff: Vec<_> = (0..4)
        .flat_map(|r1| (0..4).map(move |r2| (r1, r2)))
        .filter(|&(r1, r2)| printed.cell(r1, r2) != sl3_table().unwrap().cell(r1, r2))
        .collect();
    assert_eq!(diff, vec![(2, 3), (3, 0), (3, 2)]);
}

#[test]
fn truncated_polynomials_are_all_ones() {
    for d in 1..=5u32 {
        let t = poly_table(d).unwrap();
        compare("poly", &t, &poly_fixture(d)).unwrap();
        let n = t.summands().len();
        assert_eq!(n, d as usize + 1);
        for r1 in 0..n {
            for r2 in 0..n {
                let cell = t.cell(r1, r2);
                if r1 + r2 <= d as usize {
                    assert_eq!(cell.len(), 1);
                    assert_eq!((cell[0].s, cell[0].c.clone()), (r1 + r2, Scalar::one()));
                } else {
                    assert!(cell.is_empty());
                }
            }
        }
    }
}

#[test]
fn gln_tables_match() {
    for n in 2..=4 {
        let (p, b) = gln_tables(n).unwrap();
        compare("gln product", &p, &gln_product_fixture(n)).unwrap();
        compare("gln bracket", &b, &gln_bracket_fixture(n)).unwrap();
        // {(I)_0, −} vanishes
        assert!((0..4).all(|r| b.cell(0, r).is_empty()));
    }
}

#[test]
fn gln_scalar_part_and_abelian_factor() {
    let n = 3;
    let z = || gtable_core::exactla::Matrix::zeros(n, n);
    let u = GlnGlnAb::new(s(2), z(), s(5), z()).unwrap();
    let v = GlnGlnAb::new(s(-3), z(), s(7), z()).unwrap();
    let uv = u.product(&v).unwrap();
    assert_eq!(uv, GlnGlnAb::new(s(-6), z(), s(14 - 15), z()).unwrap());
    let basis = GlnGlnAb::basis(n);
    let ab: Vec<_> = basis.iter().filter(|x| x.to_pair().0.is_zero()).collect();
    assert_eq!(ab.len(), n * n);
    for x in &ab {
        for y in &ab {
            assert!(x.bracket(y).unwrap().coords().iter().all(Scalar::is_zero));
        }
    }
}

#[test]
fn gln_poisson_axioms_on_the_full_basis() {
    for n in 2..=4 {
        let basis = GlnGlnAb::basis(n);
        let prods: Vec<Vec<GlnGlnAb>> = basis
            .iter()
            .map(|x| basis.iter().map(|y| x.product(y).unwrap()).collect())
            .collect();
        let bras: Vec<Vec<GlnGlnAb>> = basis
            .iter()
            .map(|x| basis.iter().map(|y| x.bracket(y).unwrap()).collect())
            .collect();
        let add = |a: &GlnGlnAb, b: &GlnGlnAb| {
            let c: Vec<Scalar> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + &y).collect();
            GlnGlnAb::from_coords(n, &c)
        };
        let neg = |a: &GlnGlnAb| {
            let c: Vec<Scalar> = a.coords().iter().map(|x| -x).collect();
            GlnGlnAb::from_coords(n, &c)
        };
        let zero = GlnGlnAb::from_coords(n, &vec![Scalar::zero(); 2 * n * n]);
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                assert_eq!(prods[i][j], prods[j][i], "commutativity n={n}");
                assert_eq!(bras[i][j], neg(&bras[j][i]), "antisymmetry n={n}");
                for k in 0..basis.len() {
                    let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                    assert_eq!(
                        prods[i][j].product(z).unwrap(),
                        x.product(&prods[j][k]).unwrap(),
                        "associativity n={n}"
                    );
                    let jac = add(
                        &add(&bras[i][j].bracket(z).unwrap(), &bras[j][k].bracket(x).unwrap()),
                        &bras[k][i].bracket(y).unwrap(),
                    );
                    assert_eq!(jac, zero, "Jacobi n={n}");
                    let leibniz = add(&bras[i][j].product(z).unwrap(), &y.product(&bras[i][k]).unwrap());
                    assert_eq!(x.bracket(&prods[j][k]).unwrap(), leibniz, "Leibniz n={n}");
                }
            }
        }
    }
}

#[test]
fn gln_rejects_bad_input() {
    let m2 = gtable_core::exactla::Matrix::identity(2);
    let z3 = gtable_core::exactla::Matrix::zeros(3, 3);
    assert_eq!(
        GlnGlnAb::new(s(0), m2, s(0), gtable_core::exactla::Matrix::zeros(2, 2)),
        Err(GalleryError::NotTraceless)
    );
    let a = GlnGlnAb::new(
        s(1),
        gtable_core::exactla::Matrix::zeros(2, 2),
        s(0),
        gtable_core::exactla::Matrix::zeros(2, 2),
    )
    .unwrap();
    let b = GlnGlnAb::new(s(1), z3.clone(), s(0), z3).unwrap();
    assert_eq!(a.product(&b), Err(GalleryError::SizeMismatch));
}

#[test]
fn heisenberg_dimensions() {
    let dims = even_dimensions(&heisenberg_context());
    let expected = [
        ((0, 0), 1),
        ((2, 0), 2),
        ((1, 1), 4),
        ((3, 1), 2),
        ((0, 2), 2),
        ((2, 2), 4),
        ((1, 3), 2),
        ((3, 3), 1),
    ];
    assert_eq!(dims, expected);
    assert_eq!(dims.iter().map(|(_, d)| d).sum::<usize>(), 18);
}

#[test]
fn heisenberg_representatives_pass_every_check() {
    let checks = check_representatives(&heisenberg_context()).unwrap();
    assert_eq!(checks.len(), 10);
    for c in &checks {
        assert!(c.passed(), "{c:?}");
    }
    let ids: Vec<_> = checks.iter().map(|c| c.id).collect();
    assert_eq!(ids, REPRESENTATIVE_IDS);
}

#[test]
fn heisenberg_orbit_basis_spans_the_even_part() {
    let h = EvenCohomology::new().unwrap();
    assert_eq!(h.dim(), 18);
    assert_eq!(h.basis().len(), 18);
    h.module().unwrap().validate().unwrap();
    assert_eq!(h.decomposition().unwrap().len(), 10);
}

#[test]
fn heisenberg_tables_reproduce_the_printed_cells() {
    let r = heisenberg_pipeline().unwrap();
    assert_eq!(r.total_even, 18);
    compare("cup", &r.cup, &heisenberg_cup_fixture()).unwrap();
    compare("bracket", &r.bracket, &heisenberg_bracket_fixture()).unwrap();

    // H0^11 ∨ H0^11 = −6 H0^22
    assert_eq!(r.cup.cell(H011, H011).len(), 1);
    assert_eq!(r.cup.coeff(H011, H011, H022, 1), s(-6));
    // {H1^20, H1^02} = ½ H2^11 − ½ H0^11
    assert_eq!(r.bracket.coeff(H120, H102, H211, 1), q(1, 2));
    assert_eq!(r.bracket.coeff(H120, H102, H011, 1), q(-1, 2));
    assert_eq!(r.bracket.cell(H120, H102).len(), 2);
    // {H0^00, −} = 0
    assert!((0..10).all(|x| r.bracket.cell(H000, x).is_empty()));
    // the skew pair
    assert_eq!(r.cup.coeff(H120, H102, H022, 1), q(1, 2));
    assert_eq!(r.cup.coeff(H120, H102, H222, 1), q(-1, 2));
    assert_eq!(r.cup.coeff(H102, H120, H022, 1), q(-1, 2));
    assert_eq!(r.cup.coeff(H102, H120, H222, 1), q(-1, 2));
}

const BIDEGREES: [(usize, usize); 10] = [
    (0, 0),
    (1, 1),
    (1, 1),
    (2, 0),
    (0, 2),
    (2, 2),
    (2, 2),
    (3, 1),
    (1, 3),
    (3, 3),
];

#[test]
fn heisenberg_tables_respect_bidegrees() {
    let r = heisenberg_pipeline().unwrap();
    for (r1, r2, e) in r.cup.entries() {
        let ((p1, q1), (p2, q2)) = (BIDEGREES[r1], BIDEGREES[r2]);
        assert_eq!(BIDEGREES[e.s], (p1 + p2, q1 + q2));
    }
    for (r1, r2, e) in r.bracket.entries() {
        let ((p1, q1), (p2, q2)) = (BIDEGREES[r1], BIDEGREES[r2]);
        assert_eq!(BIDEGREES[e.s], (p1 + p2 - 1, q1 + q2 - 1));
    }
}

fn assert_round_trip(name: &str, product: &Bilinear, dec: &Decomposition, lab: &Labeling) {
    let t = extract_algebra(product, dec, lab).unwrap();
    assert_eq!(&expand_in_module(&t, lab, dec, dec).unwrap(), product, "{name}");
    let parts: Vec<(String, _)> = t.summands().iter().map(|s| (s.id.clone(), s.irrep)).collect();
    let standard = decompose_standard(&parts, lab).unwrap();
    let again = extract_algebra(&expand(&t, lab).unwrap(), &standard, lab).unwrap();
    assert_eq!(again.first_difference(&t), None, "{name}");
}

#[test]
fn extract_expand_round_trips() {
    let mut algebras: Vec<(String, GalleryAlgebra)> = vec![
        ("s3".into(), s3_algebra().unwrap()),
        ("sl3".into(), sl3_algebra().unwrap()),
    ];
    for k in 2..=4 {
        algebras.push((format!("M_{k}"), mk_algebra(k).unwrap()));
    }
    for d in 1..=4 {
        algebras.push((format!("poly {d}"), poly_algebra(d).unwrap()));
    }
    for n in 2..=3 {
        let (p, b) = gln_algebra(n).unwrap();
        algebras.push((format!("gl({n}) product"), p));
        algebras.push((format!("gl({n}) bracket"), b));
    }
    let (p, b) = gln_sl2_algebra().unwrap();
    algebras.push(("gl(3) corner product".into(), p));
    algebras.push(("gl(3) corner bracket".into(), b));
    for (name, a) in &algebras {
        assert_round_trip(name, &a.product, &a.decomposition, &a.labeling);
    }
    let h = EvenCohomology::new().unwrap();
    let dec = h.decomposition().unwrap();
    let lab = Labeling::sl2_first();
    assert_round_trip("H_E cup", &h.cup().unwrap(), &dec, &lab);
    assert_round_trip("H_E bracket", &h.bracket().unwrap(), &dec, &lab);
}

#[test]
fn isomorphism_between_h_e_and_gl3() {
    let f = archived_isomorphism();
    assert!(verify_isomorphism(&f).unwrap());
    assert_eq!(find_isomorphism().unwrap(), f);
}

#[test]
fn isomorphism_is_invertible_and_not_trivially_true() {
    let r = heisenberg_pipeline().unwrap();
    let (p, b) = gln_sl2_algebra().unwrap();
    let (gp, gb) = (p.table().unwrap(), b.table().unwrap());
    let lab = Labeling::sl2_first();
    let f = archived_isomorphism();
    let m = assemble(&f, r.cup.summands(), gp.summands(), &lab).unwrap();
    assert_eq!(m.rows(), 18);
    assert!(!m.determinant().is_zero());
    // dropping the rescalings breaks the bracket condition
    let id = GMatrix::identity(10);
    assert!(!check_morphism(&r.bracket, &gb, &id, &lab).unwrap());
    assert!(check_morphism(&r.bracket, &gb, &f, &lab).unwrap());
    assert!(check_morphism(&r.cup, &gp, &f, &lab).unwrap());
}
