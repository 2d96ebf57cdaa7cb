use gtable_core::exactla::Scalar;
use gtable_core::gallery::*;
use gtable_core::gtable::GTable;

use super::{check, CheckResult, Suite};

/// Commutativity, associativity, antisymmetry, Jacobi and Leibniz for
/// `gl(n) ⋉ gl(n)_ab` on every basis triple.
pub fn gln_axioms(n: usize) -> Result<(), String> {
    let basis = GlnGlnAb::basis(n);
    let err = |e: GalleryError| e.to_string();
    let add = |a: &GlnGlnAb, b: &GlnGlnAb| {
        let c: Vec<Scalar> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + &y).collect();
        GlnGlnAb::from_coords(n, &c)
    };
    let neg = |a: &GlnGlnAb| {
        let c: Vec<Scalar> = a.coords().iter().map(|x| -x).collect();
        GlnGlnAb::from_coords(n, &c)
    };
    let zero = GlnGlnAb::from_coords(n, &vec![Scalar::zero(); 2 * n * n]);
    let mut prods = Vec::new();
    let mut bras = Vec::new();
    for x in &basis {
        prods.push(
            basis
                .iter()
                .map(|y| x.product(y))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?,
        );
        bras.push(
            basis
                .iter()
                .map(|y| x.bracket(y))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?,
        );
    }
    let fail = |what: &str, i: usize, j: usize| Err(format!("{what} fails on basis elements {i}, {j}"));
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if prods[i][j] != prods[j][i] {
                return fail("commutativity", i, j);
            }
            if bras[i][j] != neg(&bras[j][i]) {
                return fail("antisymmetry", i, j);
            }
            for (k, z) in basis.iter().enumerate() {
                let (x, y) = (&basis[i], &basis[j]);
                if prods[i][j].product(z).map_err(err)? != x.product(&prods[j][k]).map_err(err)? {
                    return fail("associativity", i, j);
                }
                let jac = add(
                    &add(
                        &bras[i][j].bracket(z).map_err(err)?,
                        &bras[j][k].bracket(x).map_err(err)?,
                    ),
                    &bras[k][i].bracket(y).map_err(err)?,
                );
                if jac != zero {
                    return fail("Jacobi", i, j);
                }
                let leibniz = add(
                    &bras[i][j].product(z).map_err(err)?,
                    &y.product(&bras[i][k]).map_err(err)?,
                );
                if x.bracket(&prods[j][k]).map_err(err)? != leibniz {
                    return fail("Leibniz", i, j);
                }
            }
        }
    }
    Ok(())
}

type Fixture = (String, Box<dyn Fn() -> Result<(GTable, GTable), GalleryError>>);

fn fixtures() -> Vec<Fixture> {
    let mut v: Vec<Fixture> = vec![
        ("s3".into(), Box::new(|| Ok((s3_table()?, s3_fixture())))),
        (
            "s3 cotable".into(),
            Box::new(|| Ok((s3_cotable()?, s3_cotable_fixture()))),
        ),
        ("sl3".into(), Box::new(|| Ok((sl3_table()?, sl3_fixture())))),
    ];
    for k in 2..=5 {
        v.push((format!("M_{k}"), Box::new(move || Ok((mk_table(k)?, mk_fixture(k))))));
    }
    for d in 1..=5 {
        v.push((
            format!("poly {d}"),
            Box::new(move || Ok((poly_table(d)?, poly_fixture(d)))),
        ));
    }
    for n in 2..=4 {
        v.push((
            format!("gl({n}) product"),
            Box::new(move || Ok((gln_tables(n)?.0, gln_product_fixture(n)))),
        ));
        v.push((
            format!("gl({n}) bracket"),
            Box::new(move || Ok((gln_tables(n)?.1, gln_bracket_fixture(n)))),
        ));
    }
    v
}

pub fn suite() -> Vec<CheckResult> {
    let s = Suite::Gallery;
    let fx = fixtures();
    vec![
        check(s, "heisenberg pipeline", 1, |_| {
            heisenberg_pipeline().map(|_| ()).map_err(|e| e.to_string())
        }),
        check(s, "fixtures reproduce", fx.len(), |i| {
            let (name, build) = &fx[i];
            let (got, want) = build().map_err(|e| format!("{name}: {e}"))?;
            compare(name, &got, &want).map_err(|e| e.to_string())
        }),
        check(s, "gl(n) Poisson axioms", 3, |i| gln_axioms(i + 2)),
        check(s, "isomorphism with gl(3)", 1, |_| {
            let f = archived_isomorphism();
            match verify_isomorphism(&f) {
                Ok(true) => Ok(()),
                Ok(false) => Err("the archived map is not an isomorphism".into()),
                Err(e) => Err(e.to_string()),
            }
        }),
    ]
}
