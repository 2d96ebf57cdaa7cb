use gtable_core::exactla::{q, Matrix, Scalar};
use gtable_core::supercochain::*;
use proptest::prelude::*;

fn c(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn mono(dual: &[usize], primal: &[usize], k: i64) -> Element {
    Element::monomial(dual, primal, c(k))
}

/// Heisenberg with g = (x₁, x₋₁, h₀), g* = (x⁻¹, x¹, h⁰).
fn heisenberg() -> ComplexContext {
    let names = |v: [&str; 3]| v.iter().map(|s| s.to_string()).collect();
    ComplexContext::from_structure_constants(3, |i, j| {
        if (i, j) == (0, 1) {
            vec![c(0), c(0), c(1)]
        } else {
            vec![c(0); 3]
        }
    })
    .unwrap()
    .with_names(names(["x₁", "x₋₁", "h₀"]), names(["x⁻¹", "x¹", "h⁰"]))
    .with_sl2(
        Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]),
    )
    .unwrap()
}

fn sl2_context() -> ComplexContext {
    // (E, H, F): [E,F] = H, [H,E] = 2E, [H,F] = −2F
    ComplexContext::from_structure_constants(3, |i, j| match (i, j) {
        (0, 1) => vec![c(-2), c(0), c(0)],
        (0, 2) => vec![c(0), c(1), c(0)],
        (1, 2) => vec![c(0), c(0), c(-2)],
        _ => vec![c(0); 3],
    })
    .unwrap()
}

fn filiform4() -> ComplexContext {
    ComplexContext::from_structure_constants(4, |i, j| match (i, j) {
        (0, 1) => vec![c(0), c(0), c(1), c(0)],
        (0, 2) => vec![c(0), c(0), c(0), c(1)],
        _ => vec![c(0); 4],
    })
    .unwrap()
}

#[test]
fn product_examples() {
    // (x¹h⁰⊗1) ∨ (1⊗x₁h₀) = x¹h⁰ ⊗ x₁h₀
    assert_eq!(
        mono(&[1, 2], &[], 1).vee(&mono(&[], &[0, 2], 1)),
        mono(&[1, 2], &[0, 2], 1)
    );
    // (x¹⊗x₁) ∨ (x⁻¹⊗x₋₁) = −x¹x⁻¹ ⊗ x₁x₋₁
    assert_eq!(
        mono(&[1], &[0], 1).vee(&mono(&[0], &[1], 1)),
        mono(&[1, 0], &[0, 1], -1)
    );
    let z = mono(&[0, 2], &[1], 5);
    assert_eq!(Element::one().vee(&z), z);
}

#[test]
fn bracket_examples() {
    assert_eq!(bracket(&mono(&[2], &[], 1), &mono(&[], &[2], 1)), Element::one());
    assert_eq!(bracket(&mono(&[], &[2], 1), &mono(&[2], &[], 1)), Element::one());
    assert!(bracket(&mono(&[1], &[], 1), &mono(&[0, 2], &[], 1)).is_zero());
    assert!(bracket(&mono(&[], &[0], 1), &mono(&[], &[1], 1)).is_zero());
    // {x¹⊗x₋₁, x¹h⁰⊗1} = x¹h⁰⊗1
    assert_eq!(
        bracket(&mono(&[1], &[1], 1), &mono(&[1, 2], &[], 1)),
        mono(&[1, 2], &[], 1)
    );
}

#[test]
fn heisenberg_differential() {
    let ctx = heisenberg();
    // d(h⁰ ⊗ x₁x₋₁) = x⁻¹x¹⊗x₁x₋₁ − x⁻¹h⁰⊗x₁h₀ − x¹h⁰⊗x₋₁h₀
    let expected = &(&mono(&[0, 1], &[0, 1], 1) - &mono(&[0, 2], &[0, 2], 1)) - &mono(&[1, 2], &[1, 2], 1);
    assert_eq!(ctx.differential(&mono(&[2], &[0, 1], 1)), expected);
    assert!(ctx.differential(&Element::one()).is_zero());
    assert!(ctx.differential(&mono(&[1], &[], 1)).is_zero());
    assert_eq!(ctx.differential(&mono(&[2], &[], 1)), mono(&[0, 1], &[], 1));
    assert_eq!(ctx.render(&ctx.differential(&mono(&[2], &[], 1))), "x⁻¹x¹⊗1");
}

#[test]
fn differential_against_classical_formula() {
    // classical: (dξ)(x, y) = −ξ([x, y]); ours carries the opposite overall sign
    let ctx = sl2_context();
    let structure = [((0, 1), [-2, 0, 0]), ((0, 2), [0, 1, 0]), ((1, 2), [0, 0, -2])];
    for k in 0..3 {
        let d = ctx.differential(&mono(&[k], &[], 1));
        for ((i, j), bracket) in structure {
            assert_eq!(d.coeff(Mono::new(&[i, j], &[]).unwrap().0), c(bracket[k]));
        }
    }
}

#[test]
fn sl2_action_examples() {
    let ctx = heisenberg();
    // F·(x¹⊗x₁) = x¹⊗x₋₁ − x⁻¹⊗x₁
    assert_eq!(
        ctx.sl2_act(Sl2Op::F, &mono(&[1], &[0], 1)).unwrap(),
        &mono(&[1], &[1], 1) - &mono(&[0], &[0], 1)
    );
    assert!(ctx.sl2_act(Sl2Op::H, &Element::one()).unwrap().is_zero());
    let once = ctx.sl2_act(Sl2Op::F, &mono(&[1, 2], &[], 1)).unwrap();
    assert_eq!(once, mono(&[0, 2], &[], -1));
    assert!(ctx.sl2_act(Sl2Op::F, &once).unwrap().is_zero());
    // duals: E·x⁻¹ = −x¹
    assert_eq!(ctx.sl2_act(Sl2Op::E, &mono(&[0], &[], 1)).unwrap(), mono(&[1], &[], -1));
    assert_eq!(
        sl2_context().sl2_act(Sl2Op::E, &Element::one()),
        Err(CochainError::NoSl2Action)
    );
}

#[test]
fn heisenberg_cohomology_dimensions() {
    let ctx = heisenberg();
    let h00 = cohomology(&ctx, 0, 0);
    assert_eq!(h00.reps(), &[Element::one()]);
    assert_eq!(cohomology(&ctx, 1, 1).dim(), 4);
    let even: usize = (0..=3)
        .flat_map(|p| (0..=3).map(move |q| (p, q)))
        .filter(|(p, q)| (p + q) % 2 == 0)
        .map(|(p, q)| cohomology(&ctx, p, q).dim())
        .sum();
    assert_eq!(even, 18);
}

#[test]
fn class_coordinates() {
    let ctx = heisenberg();
    let h = cohomology(&ctx, 1, 1);
    let mut unit = vec![c(0); h.dim()];
    unit[0] = c(1);
    assert_eq!(h.class_coords(&ctx, &h.reps()[0]).unwrap(), unit);
    let w = &mono(&[], &[0, 2], 3) + &mono(&[], &[1], -2);
    let w = w.part(0, 1);
    let exact = ctx.differential(&w);
    assert_eq!(h.class_coords(&ctx, &exact).unwrap(), vec![c(0); h.dim()]);
    assert_eq!(h.class_coords(&ctx, &(&h.reps()[0] + &exact)).unwrap(), unit);
    assert_eq!(
        h.class_coords(&ctx, &mono(&[2], &[2], 1)),
        Err(CochainError::NotACocycle)
    );
}

#[test]
fn injected_representatives_are_validated() {
    let ctx = heisenberg();
    let h20 = cohomology_with(&ctx, 2, 0, vec![mono(&[0, 2], &[], 1), mono(&[1, 2], &[], 1)]).unwrap();
    assert_eq!(h20.dim(), 2);
    assert_eq!(
        cohomology_with(&ctx, 2, 0, vec![mono(&[0, 1], &[], 1), mono(&[1, 2], &[], 1)]),
        Err(CochainError::NotABasis { expected: 2, got: 2 })
    );
    assert_eq!(
        cohomology_with(&ctx, 1, 0, vec![mono(&[2], &[], 1)]),
        Err(CochainError::NotACocycle)
    );
}

#[test]
fn non_jacobi_structure_is_rejected() {
    // [e0,e1] = e1, [e1,e2] = e0, [e0,e2] = 0 violates Jacobi
    let bad = ComplexContext::from_structure_constants(3, |i, j| match (i, j) {
        (0, 1) => vec![c(0), c(1), c(0)],
        (1, 2) => vec![c(1), c(0), c(0)],
        _ => vec![c(0); 3],
    });
    assert_eq!(bad, Err(CochainError::NotALieBracket));
}

#[test]
fn mu_squares_to_zero_and_d_squared_vanishes() {
    for ctx in [heisenberg(), sl2_context(), filiform4()] {
        assert!(bracket(ctx.mu(), ctx.mu()).is_zero());
        let n = ctx.n();
        for p in 0..n {
            for qq in 0..=n {
                let dd = ctx.d_matrix(p + 1, qq).mul(&ctx.d_matrix(p, qq));
                assert!(dd.is_zero(), "({p},{qq})");
            }
        }
    }
}

#[test]
fn differential_commutes_with_sl2() {
    let ctx = heisenberg();
    for p in 0..=3 {
        for qq in 0..=3 {
            for m in ctx.basis(p, qq) {
                let x = Element::from_mono(m, c(1));
                for op in Sl2Op::ALL {
                    assert_eq!(
                        ctx.sl2_act(op, &ctx.differential(&x)).unwrap(),
                        ctx.differential(&ctx.sl2_act(op, &x).unwrap())
                    );
                }
            }
        }
    }
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        c(1)
    } else {
        c(-1)
    }
}

/// A random homogeneous element of `C^{p,q}` for `dim g = n`, with its
/// total degree.
fn homogeneous(n: usize) -> impl Strategy<Value = (Element, usize)> {
    (0..=n, 0..=n, proptest::collection::vec(-2i64..=2, 36), 1i64..=3).prop_map(move |(p, qq, coeffs, den)| {
        let masks = |k: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == k);
        let mut e = Element::zero();
        for (m, x) in masks(p)
            .flat_map(|i| masks(qq).map(move |j| Mono::from_masks(i, j)))
            .zip(coeffs)
        {
            e.add_term(m, q(x, den));
        }
        (e, p + qq)
    })
}

type Graded = (Element, usize);

fn pair() -> impl Strategy<Value = (usize, Graded, Graded)> {
    (2..=4usize).prop_flat_map(|n| (Just(n), homogeneous(n), homogeneous(n)))
}

fn triple() -> impl Strategy<Value = (usize, Graded, Graded, Graded)> {
    (2..=4usize).prop_flat_map(|n| (Just(n), homogeneous(n), homogeneous(n), homogeneous(n)))
}

/// Structure constants of a few Lie algebras of dimension 2 to 4.
fn base_bracket(n: usize, kind: usize) -> impl Fn(usize, usize) -> Vec<Scalar> {
    let table: Vec<((usize, usize), Vec<i64>)> = match (n, kind % 3) {
        (2, 0) => vec![],
        (2, _) => vec![((0, 1), vec![0, 1])],
        (3, 0) => vec![((0, 1), vec![0, 0, 1])],
        (3, 1) => vec![
            ((0, 1), vec![-2, 0, 0]),
            ((0, 2), vec![0, 1, 0]),
            ((1, 2), vec![0, 0, -2]),
        ],
        (3, _) => vec![((0, 1), vec![0, 1, 0]), ((0, 2), vec![0, 0, 1])],
        (4, 0) => vec![((0, 1), vec![0, 0, 1, 0]), ((0, 2), vec![0, 0, 0, 1])],
        // gl(2) on E, H, F, I
        (4, 1) => vec![
            ((0, 1), vec![-2, 0, 0, 0]),
            ((0, 2), vec![0, 1, 0, 0]),
            ((1, 2), vec![0, 0, -2, 0]),
        ],
        // aff(1) ⊕ aff(1)
        _ => vec![((0, 1), vec![0, 1, 0, 0]), ((2, 3), vec![0, 0, 0, 1])],
    };
    move |i, j| {
        table
            .iter()
            .find(|(k, _)| *k == (i, j))
            .map(|(_, v)| v.iter().map(|&x| c(x)).collect())
            .unwrap_or_else(|| vec![c(0); n])
    }
}

/// A Lie algebra from [`base_bracket`] in the basis given by the columns of
/// an invertible `a`: `[x, y]' = a⁻¹ [a x, a y]`.
fn random_context() -> impl Strategy<Value = ComplexContext> {
    (2..=4usize, 0..3usize, proptest::collection::vec(-2i64..=2, 16)).prop_filter_map(
        "singular change of basis",
        |(n, kind, entries)| {
            let a = Matrix::from_fn(n, n, |i, j| c(entries[i * n + j] + if i == j { 3 } else { 0 }));
            let inv = a.inverse()?;
            let base = base_bracket(n, kind);
            let br = |x: &[Scalar], y: &[Scalar]| {
                let mut out = vec![c(0); n];
                for (i, xi) in x.iter().enumerate() {
                    for (j, yj) in y.iter().enumerate() {
                        let coef = xi * yj;
                        if coef.is_zero() || i == j {
                            continue;
                        }
                        let (v, s) = if i < j { (base(i, j), c(1)) } else { (base(j, i), c(-1)) };
                        for (o, vk) in out.iter_mut().zip(&v) {
                            *o += &(&coef * &s) * vk;
                        }
                    }
                }
                out
            };
            let ctx = ComplexContext::from_structure_constants(n, |i, j| inv.mul_vec(&br(&a.col(i), &a.col(j))))
                .expect("transported bracket is a Lie bracket");
            Some(ctx)
        },
    )
}

fn random_context_with(k: usize) -> impl Strategy<Value = (ComplexContext, Vec<Graded>)> {
    random_context().prop_flat_map(move |ctx| {
        let n = ctx.n();
        (Just(ctx), proptest::collection::vec(homogeneous(n), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn vee_is_super_commutative((_, (a, da), (b, db)) in pair()) {
        prop_assert_eq!(a.vee(&b), b.vee(&a).scale(&sign(da * db)));
    }

    #[test]
    fn vee_is_associative((_, (a, _), (b, _), (x, _)) in triple()) {
        prop_assert_eq!(a.vee(&b).vee(&x), a.vee(&b.vee(&x)));
    }

    #[test]
    fn generators_bracket_by_the_pairing(n in 2..=4usize, i in 0..4usize, j in 0..4usize) {
        let (i, j) = (i % n, j % n);
        let (xi, xj) = (Element::generator(Gen::Dual(i)), Element::generator(Gen::Dual(j)));
        let (ei, ej) = (Element::generator(Gen::Primal(i)), Element::generator(Gen::Primal(j)));
        // {g, g} = {g*, g*} = 0
        prop_assert!(bracket(&xi, &xj).is_zero());
        prop_assert!(bracket(&ei, &ej).is_zero());
        // {φ, v} = {v, φ} = φ(v)
        let pairing = if i == j { Element::one() } else { Element::zero() };
        prop_assert_eq!(bracket(&xi, &ej), pairing.clone());
        prop_assert_eq!(bracket(&ej, &xi), pairing);
    }

    #[test]
    fn bracket_is_super_antisymmetric((_, (a, da), (b, db)) in pair()) {
        prop_assert_eq!(bracket(&a, &b), bracket(&b, &a).scale(&-sign(da * db)));
    }

    #[test]
    fn poisson_identity((_, (a, da), (b, db), (x, _)) in triple()) {
        let lhs = bracket(&a.vee(&b), &x);
        let rhs = &a.vee(&bracket(&b, &x)) + &b.vee(&bracket(&a, &x)).scale(&sign(da * db));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn super_jacobi((_, (a, da), (b, db), (x, _)) in triple()) {
        let lhs = bracket(&a, &bracket(&b, &x));
        let rhs = &bracket(&bracket(&a, &b), &x) + &bracket(&b, &bracket(&a, &x)).scale(&sign(da * db));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bidegrees_add((_, (a, _), (b, _)) in pair()) {
        let (Some((p1, q1)), Some((p2, q2))) = (a.bidegree(), b.bidegree()) else { return Ok(()); };
        for (p, qq) in a.vee(&b).bidegrees() {
            prop_assert_eq!((p, qq), (p1 + p2, q1 + q2));
        }
        for (p, qq) in bracket(&a, &b).bidegrees() {
            prop_assert_eq!((p + 1, qq + 1), (p1 + p2, q1 + q2));
        }
    }

    #[test]
    fn peeling_order_is_irrelevant(
        (n, (b, _)) in (2..=4usize).prop_flat_map(|n| (Just(n), homogeneous(n))),
        mask in 0u32..1 << 8,
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let low = (1u32 << n) - 1;
        let canonical = Mono::from_masks(mask & low, (mask >> 4) & low);
        let gens = canonical.gens();
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < gens.len()).collect();
        let shuffled: Vec<Gen> = order.iter().map(|&i| gens[i]).collect();
        let (_, neg) = Mono::from_gens(&shuffled).unwrap();
        let expected = bracket(&Element::from_mono(canonical, c(1)), &b);
        let got = bracket_factored(&shuffled, &b).scale(&sign(neg as usize));
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn d_squares_to_zero((ctx, xs) in random_context_with(1)) {
        let (a, _) = &xs[0];
        prop_assert!(bracket(ctx.mu(), ctx.mu()).is_zero());
        prop_assert!(ctx.differential(&ctx.differential(a)).is_zero());
    }

    #[test]
    fn d_derives_both_products((ctx, xs) in random_context_with(2)) {
        let ((a, da), (b, _)) = (&xs[0], &xs[1]);
        let d = |x: &Element| ctx.differential(x);
        let vee_rule = &d(a).vee(b) + &a.vee(&d(b)).scale(&sign(*da));
        prop_assert_eq!(d(&a.vee(b)), vee_rule);
        let bracket_rule = &bracket(&d(a), b) + &bracket(a, &d(b)).scale(&sign(*da));
        prop_assert_eq!(d(&bracket(a, b)), bracket_rule);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_products_are_well_defined(
        ctx in random_context(),
        (p1, q1, p2, q2) in (0..=4usize, 0..=4usize, 0..=4usize, 0..=4usize),
        lam in proptest::collection::vec(-3i64..=3, 12),
        w1 in proptest::collection::vec(-2i64..=2, 36),
        w2 in proptest::collection::vec(-2i64..=2, 36),
    ) {
        let n = ctx.n();
        let (p1, q1, p2, q2) = (p1.min(n), q1.min(n), p2.min(n), q2.min(n));
        let pick = |p: usize, qq: usize, off: usize| {
            let h = cohomology(&ctx, p, qq);
            let mut z = Element::zero();
            for (i, r) in h.reps().iter().enumerate() {
                z.add_scaled(r, &c(lam[(off + i) % lam.len()]));
            }
            z
        };
        // z + d w for a random cochain w one degree below
        let below = |w: &[i64], p: usize, qq: usize| {
            if p == 0 {
                return Element::zero();
            }
            let basis = ctx.basis(p - 1, qq);
            let v: Vec<Scalar> = (0..basis.len()).map(|i| c(w[i % w.len()])).collect();
            ctx.from_vector(&v, p - 1, qq)
        };
        let (z1, z2) = (pick(p1, q1, 0), pick(p2, q2, 5));
        let y1 = &z1 + &ctx.differential(&below(&w1, p1, q1));
        let y2 = &z2 + &ctx.differential(&below(&w2, p2, q2));

        if p1 + p2 <= n && q1 + q2 <= n {
            let h = cohomology(&ctx, p1 + p2, q1 + q2);
            prop_assert_eq!(
                h.class_coords(&ctx, &y1.vee(&y2)).unwrap(),
                h.class_coords(&ctx, &z1.vee(&z2)).unwrap()
            );
        }
        if p1 + p2 >= 1 && q1 + q2 >= 1 {
            let h = cohomology(&ctx, p1 + p2 - 1, q1 + q2 - 1);
            prop_assert_eq!(
                h.class_coords(&ctx, &bracket(&y1, &y2)).unwrap(),
                h.class_coords(&ctx, &bracket(&z1, &z2)).unwrap()
            );
        }
    }
}
