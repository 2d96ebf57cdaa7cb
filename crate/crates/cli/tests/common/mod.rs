use std::path::{Path, PathBuf};
use std::process::Command;

/// A golden case: file name, arguments and expected exit code. Files ending
/// in `.stderr` hold the diagnostics, all others the report.
pub struct Case {
    pub file: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(file: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { file, args, code }
}

pub const CASES: &[Case] = &[
    case("heisenberg_cup.txt", &["heisenberg", "cup"], 0),
    case("heisenberg_cup.tex", &["heisenberg", "cup", "--format", "latex"], 0),
    case(
        "heisenberg_bracket.json",
        &["heisenberg", "bracket", "--format", "json"],
        0,
    ),
    case(
        "heisenberg_bracket.tex",
        &["heisenberg", "bracket", "--format", "latex"],
        0,
    ),
    case("heisenberg_report.txt", &["heisenberg", "report"], 0),
    case("heisenberg_report.json", &["--format", "json", "heisenberg"], 0),
    case("gln_n2_tables.txt", &["gln", "--n", "2"], 0),
    case(
        "gln_n3_tables.json",
        &["gln", "--n", "3", "tables", "--format", "json"],
        0,
    ),
    case(
        "gln_n3_tables.tex",
        &["gln", "--n", "3", "tables", "--format", "latex"],
        0,
    ),
    case("gln_n3_check.txt", &["gln", "--n", "3", "check"], 0),
    case("gln_n3_iso.txt", &["gln", "--n", "3", "iso"], 0),
    case("gln_n3_iso.json", &["gln", "--n", "3", "iso", "--format", "json"], 0),
    case("gln_n2_iso.stderr", &["gln", "--n", "2", "iso"], 2),
    case("gln_missing_n.stderr", &["gln", "tables"], 2),
    case("s3_table.txt", &["s3"], 0),
    case("s3_table.json", &["s3", "table", "--format", "json"], 0),
    case("s3_cotable.txt", &["s3", "cotable"], 0),
    case("s3_cotable.tex", &["s3", "cotable", "--format", "latex"], 0),
    case("matrix_algebra_k2.txt", &["matrix-algebra", "--k", "2"], 0),
    case(
        "matrix_algebra_k3.json",
        &["matrix-algebra", "--k", "3", "--format", "json"],
        0,
    ),
    case(
        "matrix_algebra_k5.tex",
        &["matrix-algebra", "--k", "5", "--format", "latex"],
        0,
    ),
    case("matrix_algebra_k1.stderr", &["matrix-algebra", "--k", "1"], 2),
    case("sl3.txt", &["sl3"], 0),
    case("sl3.tex", &["sl3", "--format", "latex"], 0),
    case("poly_d3.txt", &["poly", "--max-degree", "3"], 0),
    case("poly_d2.json", &["poly", "--max-degree", "2", "--format", "json"], 0),
    case("export_spec_s3.json", &["export-spec", "s3"], 0),
    case("extract_s3.txt", &["extract", "--spec", "tests/data/s3.json"], 0),
    case(
        "extract_s3.json",
        &["extract", "--spec", "tests/data/s3.json", "--format", "json"],
        0,
    ),
    case(
        "extract_missing.stderr",
        &["extract", "--spec", "tests/data/missing.json"],
        2,
    ),
    case(
        "extract_short_product.stderr",
        &["extract", "--spec", "tests/data/short_product.json"],
        2,
    ),
    case(
        "extract_bad_action.stderr",
        &["extract", "--spec", "tests/data/bad_action.json"],
        2,
    ),
    case("extract_no_spec.stderr", &["extract"], 2),
    case("verify_repkit.txt", &["verify", "--module", "repkit"], 0),
    case(
        "verify_gtable.json",
        &["verify", "--module", "gtable", "--format", "json"],
        0,
    ),
    case("unknown_subcommand.stderr", &["tables"], 2),
];

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(file: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(file)
}

/// Runs the binary from the crate directory; returns exit code, stdout and
/// stderr.
pub fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gtable"))
        .args(args)
        .current_dir(crate_dir())
        .env("GTABLE_THREADS", "1")
        .output()
        .expect("the binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

/// The bytes a case is compared on, or a description of what went wrong.
pub fn produce(c: &Case) -> Result<String, String> {
    let (code, stdout, stderr) = run(c.args);
    if code != c.code {
        return Err(format!("{}: exit {code}, expected {}\n{stderr}", c.file, c.code));
    }
    if c.file.ends_with(".stderr") {
        if !stdout.is_empty() {
            return Err(format!("{}: unexpected stdout", c.file));
        }
        Ok(stderr)
    } else {
        Ok(stdout)
    }
}

/// Compares a case with its golden file.
pub fn check_golden(c: &Case) -> Result<(), String> {
    let got = produce(c)?;
    let want = std::fs::read_to_string(golden_path(c.file))
        .map_err(|e| format!("{}: {e} (set GTABLE_BLESS=1 to create it)", c.file))?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: output differs from the golden file", c.file))
    }
}
