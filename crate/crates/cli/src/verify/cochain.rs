use gtable_core::exactla::{Matrix, Scalar};
use gtable_core::supercochain::{bracket, bracket_factored, cohomology, ComplexContext, Element, Gen, Mono};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check, CheckResult, Suite};

/// Random cases per property and per dimension.
pub const SUPERCOCHAIN_CASES: usize = 200;

const DIMS: [usize; 3] = [2, 3, 4];

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn small(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// A random element of `C^{p,q}` with about half the monomials present.
fn random_in(rng: &mut ChaCha8Rng, n: usize, p: usize, q: usize) -> Element {
    let masks = |k: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == k);
    let mut e = Element::zero();
    for i in masks(p) {
        for j in masks(q) {
            if rng.gen_bool(0.5) {
                e.add_term(Mono::from_masks(i, j), small(rng));
            }
        }
    }
    e
}

/// A random homogeneous element and its total degree.
fn homogeneous(rng: &mut ChaCha8Rng, n: usize) -> (Element, usize) {
    let (p, q) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
    (random_in(rng, n, p, q), p + q)
}

fn expect_eq(lhs: &Element, rhs: &Element, what: &str) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

/// Structure constants of one of three Lie algebras of dimension `n`.
fn base_bracket(n: usize, kind: usize) -> Vec<((usize, usize), Vec<i64>)> {
    match (n, kind % 3) {
        (2, 0) => vec![],
        (2, _) => vec![((0, 1), vec![0, 1])],
        // Heisenberg, sl(2), and r3 with [e0, e1] = e1, [e0, e2] = e2
        (3, 0) => vec![((0, 1), vec![0, 0, 1])],
        (3, 1) => vec![
            ((0, 1), vec![-2, 0, 0]),
            ((0, 2), vec![0, 1, 0]),
            ((1, 2), vec![0, 0, -2]),
        ],
        (3, _) => vec![((0, 1), vec![0, 1, 0]), ((0, 2), vec![0, 0, 1])],
        // filiform, gl(2), aff(1) ⊕ aff(1)
        (4, 0) => vec![((0, 1), vec![0, 0, 1, 0]), ((0, 2), vec![0, 0, 0, 1])],
        (4, 1) => vec![
            ((0, 1), vec![-2, 0, 0, 0]),
            ((0, 2), vec![0, 1, 0, 0]),
            ((1, 2), vec![0, 0, -2, 0]),
        ],
        _ => vec![((0, 1), vec![0, 1, 0, 0]), ((2, 3), vec![0, 0, 0, 1])],
    }
}

/// One of a few Lie algebras of dimension `n`, written in a random basis.
pub fn random_lie_algebra(rng: &mut ChaCha8Rng, n: usize) -> ComplexContext {
    let table = base_bracket(n, rng.gen_range(0..3));
    let lie = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for ((i, j), v) in &table {
            let c = &(&x[*i] * &y[*j]) - &(&x[*j] * &y[*i]);
            for (k, &vk) in v.iter().enumerate() {
                out[k] += &c * &Scalar::from_int(vk);
            }
        }
        out
    };
    loop {
        let a = Matrix::from_fn(n, n, |_, _| Scalar::from_int(rng.gen_range(-2..=2)));
        let Some(inv) = a.inverse() else {
            continue;
        };
        return ComplexContext::from_structure_constants(n, |i, j| inv.mul_vec(&lie(&a.col(i), &a.col(j))))
            .expect("a change of basis keeps the Jacobi identity");
    }
}

pub fn suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = Suite::Supercochain;
    let cases = SUPERCOCHAIN_CASES * DIMS.len();
    let dim = |i: usize| DIMS[i % DIMS.len()];
    let mut out = Vec::new();

    out.push(check(s, "vee super-commutative", cases, |i| {
        let n = dim(i);
        let ((a, da), (b, db)) = (homogeneous(&mut rng, n), homogeneous(&mut rng, n));
        expect_eq(&a.vee(&b), &b.vee(&a).scale(&sign(da * db)), "a∨b")
    }));
    out.push(check(s, "vee associative", cases, |i| {
        let n = dim(i);
        let (a, b, c) = (
            homogeneous(&mut rng, n).0,
            homogeneous(&mut rng, n).0,
            homogeneous(&mut rng, n).0,
        );
        expect_eq(&a.vee(&b).vee(&c), &a.vee(&b.vee(&c)), "(a∨b)∨c")
    }));
    out.push(check(s, "axiom i: {g,g} = {g*,g*} = 0", cases, |i| {
        let n = dim(i);
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        for (g, h) in [(Gen::Dual(x), Gen::Dual(y)), (Gen::Primal(x), Gen::Primal(y))] {
            let b = bracket(&Element::generator(g), &Element::generator(h));
            if !b.is_zero() {
                return Err(format!("{{{g:?}, {h:?}}} = {b:?}"));
            }
        }
        Ok(())
    }));
    out.push(check(s, "axiom ii: super-antisymmetry", cases, |i| {
        let n = dim(i);
        let ((a, da), (b, db)) = (homogeneous(&mut rng, n), homogeneous(&mut rng, n));
        expect_eq(&bracket(&a, &b), &bracket(&b, &a).scale(&-sign(da * db)), "{a,b}")
    }));
    out.push(check(s, "axiom iii: Poisson identity", cases, |i| {
        let n = dim(i);
        let ((a, da), (b, db), (c, _)) = (
            homogeneous(&mut rng, n),
            homogeneous(&mut rng, n),
            homogeneous(&mut rng, n),
        );
        let rhs = &a.vee(&bracket(&b, &c)) + &b.vee(&bracket(&a, &c)).scale(&sign(da * db));
        expect_eq(&bracket(&a.vee(&b), &c), &rhs, "{a∨b,c}")
    }));
    out.push(check(s, "axiom iv: {φ,v} = {v,φ} = φ(v)", cases, |i| {
        let n = dim(i);
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (phi, v) = (Element::generator(Gen::Dual(x)), Element::generator(Gen::Primal(y)));
        let pairing = if x == y { Element::one() } else { Element::zero() };
        expect_eq(&bracket(&phi, &v), &pairing, "{φ,v}")?;
        expect_eq(&bracket(&v, &phi), &pairing, "{v,φ}")
    }));
    out.push(check(s, "super-Jacobi", cases, |i| {
        let n = dim(i);
        let ((a, da), (b, db), (c, _)) = (
            homogeneous(&mut rng, n),
            homogeneous(&mut rng, n),
            homogeneous(&mut rng, n),
        );
        let rhs = &bracket(&bracket(&a, &b), &c) + &bracket(&b, &bracket(&a, &c)).scale(&sign(da * db));
        expect_eq(&bracket(&a, &bracket(&b, &c)), &rhs, "{a,{b,c}}")
    }));
    out.push(check(s, "peeling order", cases, |i| {
        let n = dim(i);
        let (b, _) = homogeneous(&mut rng, n);
        let mono = Mono::from_masks(rng.gen_range(0..1u32 << n), rng.gen_range(0..1u32 << n));
        let mut gens = mono.gens();
        gens.shuffle(&mut rng);
        let (_, neg) = Mono::from_gens(&gens).expect("distinct factors");
        let got = bracket_factored(&gens, &b).scale(&sign(neg as usize));
        expect_eq(
            &got,
            &bracket(&Element::from_mono(mono, Scalar::one()), &b),
            "shuffled factors",
        )
    }));
    out.push(check(s, "d² = 0", cases, |i| {
        let n = dim(i);
        let ctx = random_lie_algebra(&mut rng, n);
        if !bracket(ctx.mu(), ctx.mu()).is_zero() {
            return Err("{μ, μ} ≠ 0".into());
        }
        let (a, _) = homogeneous(&mut rng, n);
        expect_eq(&ctx.differential(&ctx.differential(&a)), &Element::zero(), "d²a")
    }));
    out.push(check(s, "d derives vee", cases, |i| {
        let n = dim(i);
        let ctx = random_lie_algebra(&mut rng, n);
        let ((a, da), (b, _)) = (homogeneous(&mut rng, n), homogeneous(&mut rng, n));
        let d = |x: &Element| ctx.differential(x);
        let rhs = &d(&a).vee(&b) + &a.vee(&d(&b)).scale(&sign(da));
        expect_eq(&d(&a.vee(&b)), &rhs, "d(a∨b)")
    }));
    out.push(check(s, "d derives the bracket", cases, |i| {
        let n = dim(i);
        let ctx = random_lie_algebra(&mut rng, n);
        let ((a, da), (b, _)) = (homogeneous(&mut rng, n), homogeneous(&mut rng, n));
        let d = |x: &Element| ctx.differential(x);
        let rhs = &bracket(&d(&a), &b) + &bracket(&a, &d(&b)).scale(&sign(da));
        expect_eq(&d(&bracket(&a, &b)), &rhs, "d{a,b}")
    }));
    out.push(check(s, "induced products on cohomology", cases, |i| {
        let n = dim(i);
        let ctx = random_lie_algebra(&mut rng, n);
        let class = |rng: &mut ChaCha8Rng| {
            let (p, q) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
            let mut z = Element::zero();
            for r in cohomology(&ctx, p, q).reps() {
                z.add_scaled(r, &small(rng));
            }
            let w = if p == 0 {
                Element::zero()
            } else {
                random_in(rng, n, p - 1, q)
            };
            (p, q, z.clone(), &z + &ctx.differential(&w))
        };
        let (p1, q1, z1, y1) = class(&mut rng);
        let (p2, q2, z2, y2) = class(&mut rng);
        let compare = |p: usize, q: usize, got: &Element, want: &Element, what: &str| {
            let h = cohomology(&ctx, p, q);
            let (a, b) = (h.class_coords(&ctx, got), h.class_coords(&ctx, want));
            match (a, b) {
                (Ok(a), Ok(b)) if a == b => Ok(()),
                (a, b) => Err(format!("{what} in H^{{{p},{q}}}: {a:?} vs {b:?}")),
            }
        };
        if p1 + p2 <= n && q1 + q2 <= n {
            compare(p1 + p2, q1 + q2, &y1.vee(&y2), &z1.vee(&z2), "cup")?;
        }
        if (1..=n + 1).contains(&(p1 + p2)) && (1..=n + 1).contains(&(q1 + q2)) {
            compare(
                p1 + p2 - 1,
                q1 + q2 - 1,
                &bracket(&y1, &y2),
                &bracket(&z1, &z2),
                "bracket",
            )?;
        }
        Ok(())
    }));
    out
}
