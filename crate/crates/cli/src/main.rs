//! `mixedmult <command> [--job FILE] [--box N] [--format json|text] [--seed K] [--no-ehrhart-check]`
//!
//! Exit codes: 0 success, 1 input error, 2 inconclusive fit, 3 failed identity.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use mixedmult_core::job::{emit, parse_job, run, Format, RunOptions};
use mixedmult_core::{Error, ErrorClass};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Hilbert,
    Mixedmult,
    Multseq,
    Rees,
    Mixedvolume,
    Bernstein,
    Milnor,
    Oracle,
    Suite,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Hilbert => "hilbert",
            Command::Mixedmult => "mixedmult",
            Command::Multseq => "multseq",
            Command::Rees => "rees",
            Command::Mixedvolume => "mixedvolume",
            Command::Bernstein => "bernstein",
            Command::Milnor => "milnor",
            Command::Oracle => "oracle",
            Command::Suite => "suite",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "mixedmult", version, about = "Exact mixed multiplicities and mixed volumes of monomial data")]
struct Cli {
    command: Command,
    /// JSON job file; read from stdin when absent (except for `suite`).
    #[arg(long)]
    job: Option<PathBuf>,
    /// Largest box side used by Hilbert-polynomial fits.
    #[arg(long = "box", value_name = "N")]
    box_cap: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Seed for the random instances of `suite`.
    #[arg(long, value_name = "K")]
    seed: Option<u64>,
    /// Skip the Ehrhart cross-check of polytope volumes.
    #[arg(long)]
    no_ehrhart_check: bool,
}

fn job_text(cli: &Cli) -> Result<String, Error> {
    match &cli.job {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None if matches!(cli.command, Command::Suite) => Ok(r#"{"command":"suite"}"#.to_string()),
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), Error> {
    let job = parse_job(&job_text(cli)?)?;
    let declared = job.input.get("command").and_then(|c| c.as_str()).unwrap_or_default();
    if declared != cli.command.name() {
        return Err(Error::Parse(format!("field `command`: job declares `{declared}` but `{}` was requested", cli.command.name())));
    }
    let opts = RunOptions { box_cap: cli.box_cap, seed: cli.seed, ehrhart_check: !cli.no_ehrhart_check };
    let report = run(&job, &opts)?;
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    Ok((emit(&report, format), report.exit_code()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("mixedmult: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Input => 1,
                ErrorClass::Inconclusive => 2,
                ErrorClass::Invariant => 3,
            })
        }
    }
}
