use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use holocurv_core::complex::{run_obstruction, sp_standard, ComplexCase};
use holocurv_core::curvature::prolongation;
use holocurv_core::lorentz::{report as assembly_report, AssembleInput, Check};
use holocurv_core::report::{default_rows, structure, verify_row, verify_table, RMode, RowOptions};
use holocurv_core::{build, Error, RepSpec, Strategy};

mod render;

use render::{Format, Output, ProlongationReport};

#[derive(Parser, Debug)]
#[command(name = "holocurv", version, about = "Exact curvature spaces of holonomy algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Use dense elimination instead of the incremental one.
    #[arg(long, global = true)]
    oracle: bool,
    /// Rows for `verify-table`, separated by spaces or `;`. Repeatable.
    #[arg(long, global = true, value_name = "SPECS")]
    rows: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a representation and check closure and skewness.
    Rep { spec: String },
    /// Compute P(h) = P0 + P1.
    Pspace { spec: String },
    /// Compute P(h) and R(h) = R0 + R1 + R'.
    Rspace { spec: String },
    /// Run the verification rows.
    VerifyTable,
    /// Evaluate the highest-vector obstruction of a complex case.
    Obstruction { case: String },
    /// Assemble a Lorentzian curvature tensor from a JSON file.
    Assemble {
        path: PathBuf,
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Dimension of the first prolongation. `sp-complex:m` selects sp(2m, C).
    Prolongation { target: String },
}

fn parse_rows(raw: &[String]) -> Result<Vec<RepSpec>, Error> {
    raw.iter()
        .flat_map(|s| s.split(|c: char| c == ';' || c.is_whitespace()))
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let strategy = if cli.oracle { Strategy::Dense } else { Strategy::Incremental };
    if !cli.rows.is_empty() && !matches!(cli.command, Command::VerifyTable) {
        return Err(Error::Parse("--rows only applies to verify-table".into()));
    }
    Ok(match &cli.command {
        Command::Rep { spec } => Output::Report(structure(spec.parse()?)?),
        Command::Pspace { spec } => Output::Report(verify_row(spec.parse()?, RowOptions { strategy, r: RMode::Skip })?),
        Command::Rspace { spec } => {
            Output::Report(verify_row(spec.parse()?, RowOptions { strategy, r: RMode::Always })?)
        }
        Command::VerifyTable => {
            let rows = if cli.rows.is_empty() { default_rows() } else { parse_rows(&cli.rows)? };
            Output::Table(verify_table(&rows, RowOptions { strategy, r: RMode::Bounded })?)
        }
        Command::Obstruction { case } => Output::Obstruction(run_obstruction(case.parse::<ComplexCase>()?)?),
        Command::Assemble { path, check } => {
            let check: Check = check.parse()?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            let data = AssembleInput::from_json(&text)?.into_data()?;
            Output::Assembly(assembly_report(&data, check)?)
        }
        Command::Prolongation { target } => Output::Prolongation(prolong(target, strategy)?),
    })
}

fn prolong(target: &str, strategy: Strategy) -> Result<ProlongationReport, Error> {
    if let Some(m) = target.strip_prefix("sp-complex:") {
        let m: usize = m.parse().map_err(|_| Error::Parse(format!("bad rank '{m}' in '{target}'")))?;
        let rep = sp_standard(m)?;
        let dim = prolongation(&rep, strategy).dim();
        return Ok(ProlongationReport { target: target.into(), field: "complex", n: rep.n(), dim });
    }
    let spec: RepSpec = target.parse()?;
    let rep = build(spec)?;
    let dim = prolongation(&rep, strategy).dim();
    Ok(ProlongationReport { target: spec.to_string(), field: "real", n: rep.n(), dim })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            for line in out.failures() {
                eprintln!("mismatch: {line}");
            }
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
