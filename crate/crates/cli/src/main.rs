//! `chern`: run identity suites, homology tables, Chern comparisons and
//! single map evaluations on an input document.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use chern_core::io::{evaluate, parse_document, resolve_caps, CapFlags, InputDocument, IoError, ReportDocument};
use chern_core::verify::{check_axioms, compare_chern, homology_report, run_all, run_suite, HomologyKind, Instance};

#[derive(Parser)]
#[command(name = "chern", version, about = "Exact checks of cyclic bar constructions and relative Chern characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Input document (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Degree window D.
    #[arg(long = "degree-cap", global = true)]
    degree_cap: Option<usize>,
    /// Column cap P of the negative cyclic slices.
    #[arg(long = "column-cap", global = true)]
    column_cap: Option<usize>,
    /// Truncation N: weights below N are kept.
    #[arg(long, global = true)]
    truncation: Option<u32>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Simplicial, cyclic and Hopf axioms of every construction on the input.
    CheckAxioms,
    /// One identity suite by label, or `all`.
    Suite { label: String },
    /// Homology tables: `lie`, `hh` or `hn`.
    Homology { kind: String },
    /// Solve for a homotopy between the two Chern characters of the block.
    ChernCompare,
    /// Evaluate one map on one element.
    Eval {
        map: String,
        /// Bar word such as `x|y*z`, or wedge such as `x∧y`.
        #[arg(long)]
        element: String,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Checks,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Usage(e.into())
    }
}

fn load(path: Option<&Path>) -> Result<(InputDocument, Instance), Failure> {
    let path = path.context("--input FILE is required")?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = parse_document(&text).with_context(|| format!("in {}", path.display()))?;
    let stem = path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned());
    let inst = doc.instance(&stem)?;
    Ok((doc, inst))
}

/// Writes via a temporary file and a rename, so readers never see a
/// partial report.
fn emit(out: Option<&Path>, body: &str) -> Result<()> {
    match out {
        None => print!("{body}"),
        Some(p) => {
            let tmp = p.with_extension("partial");
            fs::write(&tmp, body).with_context(|| format!("writing {}", tmp.display()))?;
            fs::rename(&tmp, p).with_context(|| format!("writing {}", p.display()))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let c = &cli.common;
    let (doc, inst) = load(c.input.as_deref())?;
    let flags = CapFlags { degree: c.degree_cap, columns: c.column_cap, truncation: c.truncation };
    let caps = resolve_caps(&doc, flags, &inst)?;

    let report = match &cli.command {
        Command::Eval { map, element } => {
            let r = evaluate(map, element, &inst, &caps)?;
            let body = match c.format {
                Format::Json => serde_json::to_string_pretty(&r).context("serializing")? + "\n",
                Format::Text => r.to_text(),
            };
            emit(c.out.as_deref(), &body)?;
            return Ok(());
        }
        Command::CheckAxioms => ReportDocument::new("check-axioms", vec![check_axioms(&inst, &caps).map_err(IoError::from)?]),
        Command::Suite { label } if label == "all" => ReportDocument::new("suite all", run_all(&inst, &caps).map_err(IoError::from)?),
        Command::Suite { label } => {
            ReportDocument::new(format!("suite {label}"), vec![run_suite(label, &inst, &caps).map_err(IoError::from)?])
        }
        Command::Homology { kind } => {
            let k: HomologyKind = kind.parse().map_err(IoError::from)?;
            ReportDocument::new(format!("homology {k}"), vec![homology_report(k, &inst, &caps).map_err(IoError::from)?])
        }
        Command::ChernCompare => {
            let spec = inst.triangular_or("chern-compare").map_err(IoError::from)?;
            ReportDocument::new("chern-compare", vec![compare_chern(spec, &caps).map_err(IoError::from)?])
        }
    };
    let body = match c.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    emit(c.out.as_deref(), &body)?;
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
