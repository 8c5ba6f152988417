use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pinc::decide::LipschitzSearch;
use pinc::expr::{self, ManifoldExpr};
use pinc::report::{ClassesReport, JsonReport, WuReport};
use pinc::{acceptance, document, Error};

const EXIT_USAGE: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "pinc", version, about = "Decide orientability, spin, pin±, pin^c and Lipschitz structures on products of manifolds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide every structure on a manifold, e.g. "RP(2) * RP(2) * S(1)".
    Decide {
        expr: String,
        /// Cap on the number of (α, β) pairs the Lipschitz search may visit.
        #[arg(long, default_value_t = 1 << 26)]
        max_pairs: u128,
    },
    /// Stiefel–Whitney classes, lift subspaces and integral homology.
    Classes {
        expr: String,
        /// Highest degree to print (defaults to the dimension, or the known range).
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Wu classes and their agreement with the Whitney-product classes.
    Wu { expr: String },
    /// Run the acceptance suite and print a pass/fail table.
    Verify,
    /// Catalog documents for primitives.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print the document of a primitive such as "RP(3)" or "K".
    Export { primitive: String },
    /// Load a document, validate it and summarize it.
    Check { path: PathBuf },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::UnsupportedParameter(_) | Error::Document(_) => EXIT_USAGE,
        Error::UnsupportedDegree { .. } | Error::SearchLimit { .. } => EXIT_UNSUPPORTED,
        Error::InvariantViolation(_) | Error::CorruptRingData(_) | Error::Misuse(_) => EXIT_INTERNAL,
    }
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("reports serialize")),
        Format::Text => print!("{}", text(value)),
    }
}

fn parse_expr(text: &str) -> Result<ManifoldExpr, Error> {
    expr::parse(text)
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Decide { expr, max_pairs } => {
            let e = parse_expr(expr)?;
            let report = e.report(&LipschitzSearch { max_pairs: *max_pairs })?;
            let color = use_color();
            emit(format, &JsonReport::new(&report), |r| r.to_text(color));
        }
        Command::Classes { expr, max_degree } => {
            let m = parse_expr(expr)?.build()?;
            emit(format, &ClassesReport::new(&m, *max_degree)?, ClassesReport::to_text);
        }
        Command::Wu { expr } => {
            let m = parse_expr(expr)?.build()?;
            emit(format, &WuReport::new(&m)?, WuReport::to_text);
        }
        Command::Verify => {
            let outcomes = acceptance::run_all();
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            match format {
                Format::Json => {
                    let rows: Vec<_> = outcomes
                        .iter()
                        .map(|o| serde_json::json!({"id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({"criteria": rows, "failed": failed}))
                            .expect("json")
                    );
                }
                Format::Text => {
                    for o in &outcomes {
                        println!("{:>2}  {}  {}\n      {}", o.id, if o.passed { "PASS" } else { "FAIL" }, o.title, o.detail);
                    }
                    println!("\n{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
                }
            }
            return Ok(if failed == 0 { 0 } else { EXIT_INTERNAL });
        }
        Command::Catalog(CatalogCommand::Export { primitive }) => {
            let e = parse_expr(primitive)?;
            if matches!(e, ManifoldExpr::Product(..)) {
                return Err(Error::UnsupportedParameter(format!(
                    "{e} is a product; catalog documents exist for primitives only"
                )));
            }
            let doc = document::export(&e.build()?)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("json")),
                Format::Text => print!("{}", doc.to_toml()?),
            }
        }
        Command::Catalog(CatalogCommand::Check { path }) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
            let doc = document::CatalogDocument::from_toml(&text)?;
            let m = document::load(&doc)?;
            let summary = serde_json::json!({
                "name": m.name(),
                "dimension": m.dim(),
                "complete": m.is_complete(),
                "valid": true,
            });
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&summary).expect("json")),
                Format::Text => println!(
                    "{}: valid {} descriptor of dimension {}",
                    m.name(),
                    if m.is_complete() { "complete" } else { "truncated" },
                    m.dim()
                ),
            }
        }
    }
    Ok(0)
}

/// The offending input with a caret under a syntax error.
fn caret(input: &str, offset: usize) -> String {
    let col = input[..offset.min(input.len())].chars().count();
    format!("  {input}\n  {}^", " ".repeat(col))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Syntax { offset, .. } = &e {
                let input = match &cli.command {
                    Command::Decide { expr, .. } | Command::Classes { expr, .. } | Command::Wu { expr } => Some(expr),
                    Command::Catalog(CatalogCommand::Export { primitive }) => Some(primitive),
                    _ => None,
                };
                if let Some(input) = input {
                    eprintln!("{}", caret(input, *offset));
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
