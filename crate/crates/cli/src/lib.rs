//! Command-line front end: fixtures, property suites and table extraction
//! from algebra description files.

pub mod commands;
pub mod error;
pub mod json;
pub mod render;
pub mod spec;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "gtable",
    version,
    about = "Multiplication tables of algebras with a group action"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeisenbergPart {
    Cup,
    Bracket,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GlnPart {
    Tables,
    Check,
    Iso,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum S3Part {
    Table,
    Cotable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportTarget {
    HeisenbergCup,
    HeisenbergBracket,
    S3,
    Sl3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even cohomology of the Heisenberg algebra.
    Heisenberg {
        #[arg(value_enum, default_value_t = HeisenbergPart::Report)]
        part: HeisenbergPart,
    },
    /// gl(n) ⋉ gl(n)_ab as a GL(n) algebra.
    Gln {
        #[arg(long)]
        n: u32,
        #[arg(value_enum, default_value_t = GlnPart::Tables)]
        part: GlnPart,
    },
    /// The group algebra of S3 under conjugation.
    S3 {
        #[arg(value_enum, default_value_t = S3Part::Table)]
        part: S3Part,
    },
    /// k × k matrices under conjugation.
    MatrixAlgebra {
        #[arg(long)]
        k: u32,
    },
    /// sl(3) under the corner SL(2).
    Sl3,
    /// K[x, y] truncated above a total degree.
    Poly {
        #[arg(long)]
        max_degree: u32,
    },
    /// Extracts the table of an algebra description file.
    Extract {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Writes a built-in algebra as a description file.
    ExportSpec {
        #[arg(value_enum)]
        algebra: ExportTarget,
    },
    /// Runs the property suites.
    Verify {
        #[arg(long, value_enum)]
        module: Option<verify::Suite>,
    },
}

/// Exit code and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let wants_spec = argv.iter().any(|a| a == "extract");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut text = e.render().to_string();
            if code == 0 {
                return Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            if wants_spec {
                text.push('\n');
                text.push_str(spec::SCHEMA_HELP);
                text.push('\n');
            }
            return Outcome {
                code,
                stdout: String::new(),
                stderr: text,
            };
        }
    };
    let mut out = Outcome::default();
    if let Err(e) = commands::execute(&cli, &mut out) {
        out.code = e.exit_code();
        out.stderr.push_str(&format!("error: {e}\n"));
        if matches!(e, CliError::Input(_)) && matches!(cli.command, Command::Extract { .. }) {
            out.stderr.push_str(spec::SCHEMA_HELP);
            out.stderr.push('\n');
        }
    }
    out
}
