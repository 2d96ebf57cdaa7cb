use std::fmt::Write;

use gtable_core::gallery::{self, compare, EvenCohomology, GalleryError, HeisenbergReport};
use gtable_core::gtable::{GMatrix, GTable};
use gtable_core::repkit::Labeling;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::json::{self as js, TableJson};
use crate::render::{render_latex, render_text};
use crate::spec::AlgebraSpec;
use crate::verify::{self, Suite};
use crate::{Cli, Command, ExportTarget, Format, GlnPart, HeisenbergPart, Outcome, S3Part};

/// Renders one or more named tables.
pub fn emit_tables(format: Format, tables: &[(&str, &GTable)]) -> String {
    match format {
        Format::Json if tables.len() == 1 => js::table_to_json(tables[0].1),
        Format::Json => {
            let mut m = Map::new();
            for (name, t) in tables {
                m.insert(
                    (*name).to_string(),
                    serde_json::to_value(TableJson::of(t)).expect("tables serialize"),
                );
            }
            js::to_string(&Value::Object(m))
        }
        Format::Text | Format::Latex => {
            let render = if format == Format::Text {
                render_text
            } else {
                render_latex
            };
            let parts: Vec<String> = tables.iter().map(|(_, t)| render(t)).collect();
            parts.join("\n")
        }
    }
}

/// Prints `got` and fails when it differs from the fixture.
fn fixture_output(out: &mut Outcome, format: Format, tables: &[(&str, GTable, GTable)]) -> Result<(), CliError> {
    let shown: Vec<(&str, &GTable)> = tables.iter().map(|(n, got, _)| (*n, got)).collect();
    out.stdout.push_str(&emit_tables(format, &shown));
    for (name, got, want) in tables {
        compare(name, got, want)?;
    }
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut Outcome) -> Result<(), CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Heisenberg { part } => heisenberg(*part, f, out),
        Command::Gln { n, part } => gln(*n, *part, f, out),
        Command::S3 { part: S3Part::Table } => {
            fixture_output(out, f, &[("s3", gallery::s3_table()?, gallery::s3_fixture())])
        }
        Command::S3 { part: S3Part::Cotable } => fixture_output(
            out,
            f,
            &[("s3 cotable", gallery::s3_cotable()?, gallery::s3_cotable_fixture())],
        ),
        Command::MatrixAlgebra { k } => {
            if *k < 2 {
                return Err(CliError::input("--k must be at least 2"));
            }
            fixture_output(
                out,
                f,
                &[("matrix algebra", gallery::mk_table(*k)?, gallery::mk_fixture(*k))],
            )
        }
        Command::Sl3 => fixture_output(out, f, &[("sl3", gallery::sl3_table()?, gallery::sl3_fixture())]),
        Command::Poly { max_degree } => {
            if *max_degree < 1 {
                return Err(CliError::input("--max-degree must be at least 1"));
            }
            let d = *max_degree;
            fixture_output(out, f, &[("poly", gallery::poly_table(d)?, gallery::poly_fixture(d))])
        }
        Command::Extract { spec } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", spec.display())))?;
            let table = AlgebraSpec::parse(&text)?.table()?;
            out.stdout.push_str(&emit_tables(f, &[("extracted", &table)]));
            Ok(())
        }
        Command::ExportSpec { algebra } => {
            out.stdout.push_str(&js::to_string(&export(*algebra)?));
            Ok(())
        }
        Command::Verify { module } => run_verify(*module, f, out),
    }
}

fn export(target: ExportTarget) -> Result<AlgebraSpec, CliError> {
    let (lab, dec, product) = match target {
        ExportTarget::HeisenbergCup | ExportTarget::HeisenbergBracket => {
            let h = EvenCohomology::new()?;
            let product = if target == ExportTarget::HeisenbergCup {
                h.cup()?
            } else {
                h.bracket()?
            };
            (Labeling::sl2_first(), h.decomposition()?, product)
        }
        ExportTarget::S3 | ExportTarget::Sl3 => {
            let a = if target == ExportTarget::S3 {
                gallery::s3_algebra()?
            } else {
                gallery::sl3_algebra()?
            };
            (a.labeling, a.decomposition, a.product)
        }
    };
    Ok(AlgebraSpec::export(&lab, &dec, &product))
}

#[derive(Serialize)]
struct DimJson {
    p: usize,
    q: usize,
    dim: usize,
}

#[derive(Serialize)]
struct RepJson {
    id: &'static str,
    p: usize,
    q: usize,
    weight: u32,
    cocycle: bool,
    non_exact: bool,
    annihilated_by_e: bool,
    has_weight: bool,
}

fn report_text(r: &HeisenbergReport) -> String {
    let mut s = format!("even cohomology: total dimension {}\n", r.total_even);
    for ((p, q), d) in &r.dims {
        writeln!(s, "  H^{{{p},{q}}}  {d}").unwrap();
    }
    s.push_str("representatives:\n");
    let yn = |b: bool| if b { "yes" } else { "NO" };
    for c in &r.representatives {
        let (p, q) = c.bidegree;
        writeln!(
            s,
            "  {:<6} ({p},{q})  weight {}  cocycle {}  non-exact {}  E-killed {}  weight ok {}",
            c.id,
            c.weight,
            yn(c.cocycle),
            yn(c.non_exact),
            yn(c.annihilated_by_e),
            yn(c.has_weight)
        )
        .unwrap();
    }
    s
}

fn report_json(r: &HeisenbergReport) -> Value {
    let dims: Vec<DimJson> = r.dims.iter().map(|&((p, q), dim)| DimJson { p, q, dim }).collect();
    let reps: Vec<RepJson> = r
        .representatives
        .iter()
        .map(|c| RepJson {
            id: c.id,
            p: c.bidegree.0,
            q: c.bidegree.1,
            weight: c.weight,
            cocycle: c.cocycle,
            non_exact: c.non_exact,
            annihilated_by_e: c.annihilated_by_e,
            has_weight: c.has_weight,
        })
        .collect();
    json!({
        "total_even": r.total_even,
        "dims": dims,
        "representatives": reps,
        "cup": TableJson::of(&r.cup),
        "bracket": TableJson::of(&r.bracket),
    })
}

fn heisenberg(part: HeisenbergPart, f: Format, out: &mut Outcome) -> Result<(), CliError> {
    let r = gallery::heisenberg_pipeline()?;
    out.stdout.push_str(&match (part, f) {
        (HeisenbergPart::Cup, _) => emit_tables(f, &[("cup", &r.cup)]),
        (HeisenbergPart::Bracket, _) => emit_tables(f, &[("bracket", &r.bracket)]),
        (HeisenbergPart::Report, Format::Json) => js::to_string(&report_json(&r)),
        (HeisenbergPart::Report, Format::Text) => {
            format!(
                "{}\n{}",
                report_text(&r),
                emit_tables(f, &[("cup", &r.cup), ("bracket", &r.bracket)])
            )
        }
        (HeisenbergPart::Report, Format::Latex) => emit_tables(f, &[("cup", &r.cup), ("bracket", &r.bracket)]),
    });
    Ok(())
}

fn gln(n: u32, part: GlnPart, f: Format, out: &mut Outcome) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::input("--n must be at least 2"));
    }
    match part {
        GlnPart::Tables => {
            let (p, b) = gallery::gln_tables(n)?;
            fixture_output(
                out,
                f,
                &[
                    ("product", p, gallery::gln_product_fixture(n)),
                    ("bracket", b, gallery::gln_bracket_fixture(n)),
                ],
            )
        }
        GlnPart::Check => {
            let (p, b) = gallery::gln_tables(n)?;
            let results = [
                ("Poisson axioms", verify::gln_axioms(n as usize)),
                (
                    "product table",
                    compare("product", &p, &gallery::gln_product_fixture(n)).map_err(|e| e.to_string()),
                ),
                (
                    "bracket table",
                    compare("bracket", &b, &gallery::gln_bracket_fixture(n)).map_err(|e| e.to_string()),
                ),
            ];
            checks_output(out, f, &results)
        }
        GlnPart::Iso if n != 3 => Err(CliError::input("the isomorphism is only defined for --n 3")),
        GlnPart::Iso => iso(f, out),
    }
}

fn checks_output(out: &mut Outcome, f: Format, results: &[(&str, Result<(), String>)]) -> Result<(), CliError> {
    if f == Format::Json {
        let v: Vec<Value> = results
            .iter()
            .map(|(name, r)| json!({"check": name, "passed": r.is_ok(), "failure": r.as_ref().err()}))
            .collect();
        out.stdout.push_str(&js::to_string(&v));
    } else {
        for (name, r) in results {
            match r {
                Ok(()) => writeln!(out.stdout, "{name}: ok").unwrap(),
                Err(e) => writeln!(out.stdout, "{name}: FAILED: {e}").unwrap(),
            }
        }
    }
    match results.iter().find(|(_, r)| r.is_err()) {
        Some((name, _)) => Err(CliError::Failed(format!("{name} failed"))),
        None => Ok(()),
    }
}

fn iso(f: Format, out: &mut Outcome) -> Result<(), CliError> {
    let found = gallery::find_isomorphism()?;
    let archived = gallery::archived_isomorphism();
    let verified = gallery::verify_isomorphism(&found)?;
    let src = gallery::heisenberg_pipeline()?.cup;
    let tgt = gallery::gln_sl2_algebra()?.0.table()?;
    let ids = |m: &GMatrix| -> Vec<(String, String, String)> {
        m.entries()
            .map(|(x, r, c)| {
                (
                    src.summands()[r].id.clone(),
                    tgt.summands()[x].id.clone(),
                    c.to_string(),
                )
            })
            .collect()
    };
    let entries = ids(&found);
    match f {
        Format::Json => {
            let v: Vec<Value> = entries
                .iter()
                .map(|(s, t, c)| json!({"source": s, "target": t, "c": c}))
                .collect();
            out.stdout.push_str(&js::to_string(&json!({
                "matches_archived": found == archived,
                "verified": verified,
                "entries": v,
            })));
        }
        Format::Text | Format::Latex => {
            for (s, t, c) in &entries {
                writeln!(out.stdout, "{s:<6} -> {t:<7} {c}").unwrap();
            }
            writeln!(out.stdout, "matches archived: {}", found == archived).unwrap();
            writeln!(out.stdout, "morphism of both tables, invertible: {verified}").unwrap();
        }
    }
    if !verified {
        return Err(CliError::Gallery(GalleryError::NotFound));
    }
    if found != archived {
        return Err(CliError::Failed("the solved map differs from the archived one".into()));
    }
    Ok(())
}

fn run_verify(module: Option<Suite>, f: Format, out: &mut Outcome) -> Result<(), CliError> {
    let suites: Vec<Suite> = match module {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let results = verify::run_suites(&suites, verify::thread_count());
    if f == Format::Json {
        let v: Vec<Value> = results
            .iter()
            .map(|r| {
                json!({
                    "suite": r.suite.name(),
                    "check": r.name,
                    "cases": r.cases,
                    "passed": r.passed(),
                    "failure": r.failure,
                })
            })
            .collect();
        out.stdout.push_str(&js::to_string(&v));
    } else {
        for r in &results {
            out.stdout.push_str(&r.line());
            out.stdout.push('\n');
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} of {} checks failed", results.len())));
    }
    Ok(())
}
