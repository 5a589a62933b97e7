use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use crossed_ext::cli::{parse_workspace_with, run_command_with, Command, ParseOptions, RunOptions};
use crossed_ext::exactlin::Field;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Json,
}

/// Exact cohomology, crossed modules and crossed extensions of Lie and
/// Leibniz algebras.
#[derive(Debug, Parser)]
#[command(name = "crossed-ext", version)]
struct Args {
    /// check, cohomology, theta, classify, baer-sum, pushout, connecting, yoneda or report
    #[arg(value_parser = |s: &str| s.parse::<Command>())]
    command: Command,
    /// JSON workspace document
    #[arg(long)]
    input: PathBuf,
    /// q for the rationals or p:<prime>; overrides the document
    #[arg(long, value_parser = |s: &str| s.parse::<Field>().map_err(|e| e.to_string()))]
    field: Option<Field>,
    /// Highest cohomology degree computed (default 4)
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let ws = match parse_workspace_with(&text, &ParseOptions { field: args.field }) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let report = run_command_with(&ws, args.command, &RunOptions { max_degree: args.max_degree });
    match args.format {
        Format::Human => print!("{}", report.render_human()),
        Format::Json => {
            print!("{}", report.render_json());
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
        }
    }
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
