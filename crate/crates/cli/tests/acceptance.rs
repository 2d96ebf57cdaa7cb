//! One line per acceptance criterion. Criterion 6 is expected to stay red:
//! the printed `sl(3)` table is compared as printed, and three of its cells
//! violate the Jacobi identity. The run fails on any other outcome.

mod common;

use std::time::{Duration, Instant};

use gtable_cli::json::{table_from_json, table_to_json};
use gtable_cli::verify::{self, Suite, ORACLE_CASES, SUPERCOCHAIN_CASES};
use gtable_core::exactla::{q, unit_vector, Bilinear, Scalar};
use gtable_core::gallery::*;
use gtable_core::gtable::{assemble, check_morphism, expand, expand_in_module, extract_algebra, GTable};
use gtable_core::repkit::{decompose_standard, Decomposition, Labeling};

type Outcome = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn suite_passes(suite: Suite) -> Outcome {
    match verify::run_suite(suite).into_iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(r.line()),
    }
}

fn criterion_1() -> Outcome {
    let dims = even_dimensions(&heisenberg_context());
    let by_label: Vec<usize> = dims.iter().map(|(_, d)| *d).collect();
    ensure(by_label == [1, 2, 4, 2, 2, 4, 2, 1], || format!("dimensions {dims:?}"))?;
    let total: usize = by_label.iter().sum();
    ensure(total == 18, || format!("total {total}"))
}

fn criterion_2() -> Outcome {
    let checks = check_representatives(&heisenberg_context()).map_err(err)?;
    ensure(checks.len() == 10, || format!("{} representatives", checks.len()))?;
    match checks.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(format!("{c:?}")),
    }
}

const H011: usize = 1;
const H211: usize = 2;
const H120: usize = 3;
const H102: usize = 4;
const H022: usize = 5;
const H222: usize = 6;

fn criterion_3() -> Outcome {
    let r = heisenberg_pipeline().map_err(err)?;
    compare("cup", &r.cup, &heisenberg_cup_fixture()).map_err(err)?;
    let c = |r1, r2, s| r.cup.coeff(r1, r2, s, 1);
    ensure(c(H011, H011, H022) == q(-6, 1), || "H0^11 H0^11".into())?;
    ensure(
        c(H120, H102, H022) == q(1, 2)
            && c(H120, H102, H222) == q(-1, 2)
            && c(H102, H120, H022) == q(-1, 2)
            && c(H102, H120, H222) == q(-1, 2),
        || "skew cells".into(),
    )
}

fn criterion_4() -> Outcome {
    let r = heisenberg_pipeline().map_err(err)?;
    compare("bracket", &r.bracket, &heisenberg_bracket_fixture()).map_err(err)?;
    let mut seen: Vec<Scalar> = r.bracket.entries().map(|(_, _, e)| e.c.abs()).collect();
    seen.sort();
    seen.dedup();
    let want = [q(1, 2), q(1, 1), q(3, 2), q(3, 1)];
    ensure(want.iter().all(|w| seen.contains(w)), || {
        format!("coefficients {seen:?}")
    })?;
    ensure(
        r.bracket.coeff(H120, H102, H211, 1) == q(1, 2) && r.bracket.coeff(H120, H102, H011, 1) == q(-1, 2),
        || "{H1^20, H1^02}".into(),
    )
}

fn criterion_5(times: &mut Vec<(&'static str, Duration, Duration)>) -> Outcome {
    let start = Instant::now();
    let found = find_isomorphism().map_err(err)?;
    let solve = start.elapsed();
    let start = Instant::now();
    let archived = archived_isomorphism();
    let ok = verify_isomorphism(&archived).map_err(err)?;
    let check = start.elapsed();
    times.push(("solve", solve, Duration::from_secs(30)));
    times.push(("verification", check, Duration::from_secs(1)));
    ensure(found == archived, || {
        "the solved map differs from the archived one".into()
    })?;
    ensure(ok, || "archived map fails verification".into())?;
    let r = heisenberg_pipeline().map_err(err)?;
    let (p, b) = gln_sl2_algebra().map_err(err)?;
    let (gp, gb) = (p.table().map_err(err)?, b.table().map_err(err)?);
    let lab = Labeling::sl2_first();
    ensure(check_morphism(&r.bracket, &gb, &archived, &lab).map_err(err)?, || {
        "Lie tables".into()
    })?;
    ensure(check_morphism(&r.cup, &gp, &archived, &lab).map_err(err)?, || {
        "associative tables".into()
    })?;
    let m = assemble(&archived, r.cup.summands(), gp.summands(), &lab).map_err(err)?;
    ensure(!m.determinant().is_zero(), || "not invertible".into())
}

/// Cyclic sum of `((x y) z)` vanishes on every basis triple.
fn jacobi_holds(b: &Bilinear) -> bool {
    let n = b.left();
    let e = |i| unit_vector(n, i);
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let t1 = b.eval(&b.eval(&e(i), &e(j)), &e(k));
                let t2 = b.eval(&b.eval(&e(j), &e(k)), &e(i));
                let t3 = b.eval(&b.eval(&e(k), &e(i)), &e(j));
                (0..n).all(|c| (t1[c].clone() + t2[c].clone() + t3[c].clone()).is_zero())
            })
        })
    })
}

/// Cells where the extracted `sl(3)` table departs from the printed one.
fn sl3_differences() -> Result<Vec<(usize, usize)>, String> {
    let got = sl3_table().map_err(err)?;
    let printed = sl3_printed_fixture();
    Ok((0..4)
        .flat_map(|r1| (0..4).map(move |r2| (r1, r2)))
        .filter(|&(r1, r2)| got.cell(r1, r2) != printed.cell(r1, r2))
        .collect())
}

fn criterion_6() -> Outcome {
    compare("s3", &s3_table().map_err(err)?, &s3_fixture()).map_err(err)?;
    compare("s3 cotable", &s3_cotable().map_err(err)?, &s3_cotable_fixture()).map_err(err)?;
    for k in 2..=5u32 {
        let t = mk_table(k).map_err(err)?;
        compare("M_k", &t, &mk_fixture(k)).map_err(err)?;
        let m2 = if k == 2 { Scalar::zero() } else { q(1, 2) };
        let got = [t.coeff(1, 1, 0, 1), t.coeff(1, 1, 1, 1), t.coeff(1, 1, 1, 2)];
        ensure(got == [q(1, k as i64), q(1, 2), m2], || format!("M_{k}: {got:?}"))?;
    }
    for d in 1..=5u32 {
        let t = poly_table(d).map_err(err)?;
        let n = d as usize + 1;
        for r1 in 0..n {
            for r2 in 0..n {
                let cell = t.cell(r1, r2);
                let ok = if r1 + r2 <= d as usize {
                    cell.len() == 1 && cell[0].s == r1 + r2 && cell[0].c == Scalar::one()
                } else {
                    cell.is_empty()
                };
                ensure(ok, || format!("poly {d}: cell ({r1}, {r2})"))?;
            }
        }
    }
    let diff = sl3_differences()?;
    let ids = ["V0", "V2", "V1", "V1'"];
    ensure(diff.is_empty(), || {
        let cells: Vec<String> = diff.iter().map(|&(a, b)| format!("({}, {})", ids[a], ids[b])).collect();
        format!("sl3 cells {} differ from the printed table", cells.join(", "))
    })
}

/// The only accepted red: exactly the three known cells, with the printed
/// table failing Jacobi and the extracted one satisfying it.
fn criterion_6_red_is_understood(why: &str) -> bool {
    let lab = Labeling::sl2_first();
    let known = sl3_differences().is_ok_and(|d| d == [(2, 3), (3, 0), (3, 2)]);
    let printed_fails = !jacobi_holds(&expand(&sl3_printed_fixture(), &lab).unwrap());
    let ours_holds = jacobi_holds(&expand(&sl3_table().unwrap(), &lab).unwrap());
    known && printed_fails && ours_holds && why.starts_with("sl3 cells")
}

fn criterion_7() -> Outcome {
    ensure(SUPERCOCHAIN_CASES >= 200, || {
        format!("{SUPERCOCHAIN_CASES} cases per dimension")
    })?;
    suite_passes(Suite::Supercochain)
}

fn criterion_8() -> Outcome {
    ensure(ORACLE_CASES >= 100, || format!("{ORACLE_CASES} cases"))?;
    suite_passes(Suite::Gtable)
}

fn criterion_9() -> Outcome {
    for n in 2..=4 {
        verify::gln_axioms(n).map_err(|e| format!("n = {n}: {e}"))?;
    }
    let (p, b) = gln_tables(3).map_err(err)?;
    compare("gl(3) product", &p, &gln_product_fixture(3)).map_err(err)?;
    compare("gl(3) bracket", &b, &gln_bracket_fixture(3)).map_err(err)
}

fn round_trip(name: &str, product: &Bilinear, dec: &Decomposition, lab: &Labeling) -> Result<GTable, String> {
    let t = extract_algebra(product, dec, lab).map_err(err)?;
    ensure(&expand_in_module(&t, lab, dec, dec).map_err(err)? == product, || {
        format!("{name}: expand∘extract")
    })?;
    let parts: Vec<(String, _)> = t.summands().iter().map(|s| (s.id.clone(), s.irrep)).collect();
    let standard = decompose_standard(&parts, lab).map_err(err)?;
    let again = extract_algebra(&expand(&t, lab).map_err(err)?, &standard, lab).map_err(err)?;
    ensure(again.first_difference(&t).is_none(), || {
        format!("{name}: extract∘expand")
    })?;
    Ok(t)
}

fn criterion_10() -> Outcome {
    let mut algebras: Vec<(String, GalleryAlgebra)> = vec![
        ("s3".into(), s3_algebra().map_err(err)?),
        ("sl3".into(), sl3_algebra().map_err(err)?),
    ];
    for k in 2..=5 {
        algebras.push((format!("M_{k}"), mk_algebra(k).map_err(err)?));
    }
    for d in 1..=5 {
        algebras.push((format!("poly {d}"), poly_algebra(d).map_err(err)?));
    }
    for n in 2..=4 {
        let (p, b) = gln_algebra(n).map_err(err)?;
        algebras.push((format!("gl({n}) product"), p));
        algebras.push((format!("gl({n}) bracket"), b));
    }
    let (p, b) = gln_sl2_algebra().map_err(err)?;
    algebras.push(("gl(3) corner product".into(), p));
    algebras.push(("gl(3) corner bracket".into(), b));
    let mut tables = Vec::new();
    for (name, a) in &algebras {
        tables.push((
            name.clone(),
            round_trip(name, &a.product, &a.decomposition, &a.labeling)?,
        ));
    }
    let h = EvenCohomology::new().map_err(err)?;
    let dec = h.decomposition().map_err(err)?;
    let lab = Labeling::sl2_first();
    tables.push((
        "H_E cup".into(),
        round_trip("H_E cup", &h.cup().map_err(err)?, &dec, &lab)?,
    ));
    tables.push((
        "H_E bracket".into(),
        round_trip("H_E bracket", &h.bracket().map_err(err)?, &dec, &lab)?,
    ));
    tables.push(("s3 cotable".into(), s3_cotable().map_err(err)?));
    tables.push(("sl3 as printed".into(), sl3_printed_fixture()));

    for (name, t) in &tables {
        let text = table_to_json(t);
        let back = table_from_json(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            back.first_difference(t).is_none() && back.summands() == t.summands(),
            || format!("{name}: JSON parse∘render"),
        )?;
        ensure(table_to_json(&back) == text, || format!("{name}: JSON render∘parse"))?;
    }

    for c in common::CASES {
        common::check_golden(c)?;
        ensure(common::produce(c)? == common::produce(c)?, || {
            format!("{}: output varies between runs", c.file)
        })?;
    }
    Ok(())
}

struct Line {
    number: usize,
    title: &'static str,
    outcome: Outcome,
    /// Named timings with their budgets.
    times: Vec<(&'static str, Duration, Duration)>,
}

fn timed(number: usize, title: &'static str, budget: u64, f: impl FnOnce() -> Outcome) -> Line {
    let start = Instant::now();
    let outcome = f();
    Line {
        number,
        title,
        outcome,
        times: vec![("total", start.elapsed(), Duration::from_secs(budget))],
    }
}

fn main() {
    let mut lines = vec![
        timed(1, "Heisenberg even cohomology dimensions", 1, criterion_1),
        timed(2, "printed representatives", 1, criterion_2),
        timed(3, "cup product table", 5, criterion_3),
        timed(4, "bracket table", 5, criterion_4),
    ];
    let mut iso_times = Vec::new();
    let start = Instant::now();
    let outcome = criterion_5(&mut iso_times);
    let mut line5 = Line {
        number: 5,
        title: "isomorphism with gl(3) ⋉ gl(3)_ab",
        outcome,
        times: vec![],
    };
    line5.times.extend(iso_times);
    line5.times.push(("total", start.elapsed(), Duration::from_secs(31)));
    lines.push(line5);
    lines.extend([
        timed(6, "small example tables", 5, criterion_6),
        timed(7, "Poisson superalgebra properties", 60, criterion_7),
        timed(8, "morphism criterion against the direct check", 60, criterion_8),
        timed(9, "gl(n) ⋉ gl(n)_ab axioms and tables", 30, criterion_9),
        timed(10, "round trips and golden files", 120, criterion_10),
    ]);

    let mut unexpected = Vec::new();
    for line in &mut lines {
        if let Some((name, d, budget)) = line.times.iter().find(|(_, d, b)| d > b) {
            if line.outcome.is_ok() {
                line.outcome = Err(format!(
                    "{name} took {:.2} s, budget {:.0} s",
                    d.as_secs_f64(),
                    budget.as_secs_f64()
                ));
            }
        }
        let times: Vec<String> = line
            .times
            .iter()
            .map(|(n, d, _)| format!("{n} {:.2} s", d.as_secs_f64()))
            .collect();
        match &line.outcome {
            Ok(()) => println!(
                "criterion {:>2}  PASS  {} ({})",
                line.number,
                line.title,
                times.join(", ")
            ),
            Err(why) => {
                println!(
                    "criterion {:>2}  FAIL  {} ({}): {why}",
                    line.number,
                    line.title,
                    times.join(", ")
                );
                let expected = line.number == 6 && criterion_6_red_is_understood(why);
                if expected {
                    println!("              known: the printed cells break the Jacobi identity, the extracted ones satisfy it");
                } else {
                    unexpected.push(line.number);
                }
            }
        }
    }
    if !lines[5].outcome.is_err() {
        println!("criterion 6 was expected to fail on the printed sl3 cells");
        unexpected.push(6);
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance results for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
