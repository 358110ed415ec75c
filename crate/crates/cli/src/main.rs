//! `wbr`: exact computations in walled Brauer algebras and their quantized
//! deformations, reported as JSON or text.

mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "wbr", version, about = "Walled Brauer algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Diagram count, weight counts and the expected dimension (r+s)!.
    Dims(Flags),
    /// A basis of the center and the supersymmetric spanning selection.
    Center(Flags),
    /// Blocks of weights under delta-balancedness.
    Blocks(Flags),
    /// Path idempotents and their verification.
    Idempotents(Flags),
    /// Every diagram and Jucys-Murphy relation, plus idempotents when semisimple.
    Verify(Flags),
    /// Completion and relation checks for the quantized algebra.
    Qverify(Flags),
    /// Central characters of the selected supersymmetric polynomials.
    Characters(Flags),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeFlag {
    Rational,
    GenericDelta,
    GenericQ,
    RationalQr,
}

#[derive(Args, Debug, Clone)]
struct Flags {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    /// Loop parameter: an integer, `p/q`, or `generic`.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Specialized q for the rational-qr mode, as an integer or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Specialized rho for the rational-qr mode.
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    /// Exponent with rho = q^N in the generic-q mode.
    #[arg(long = "N")]
    n: Option<u32>,
    #[arg(long, value_enum)]
    mode: Option<ModeFlag>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest r+s accepted; defaults to WBR_SIZE_CAP or 7.
    #[arg(long = "size-cap")]
    size_cap: Option<usize>,
}

/// Failure classes with their exit codes.
#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Computation(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (name, flags) = match &cli.command {
        Command::Dims(f) => ("dims", f),
        Command::Center(f) => ("center", f),
        Command::Blocks(f) => ("blocks", f),
        Command::Idempotents(f) => ("idempotents", f),
        Command::Verify(f) => ("verify", f),
        Command::Qverify(f) => ("qverify", f),
        Command::Characters(f) => ("characters", f),
    };
    match commands::run(name, flags) {
        Ok(report) => {
            // A closed pipe downstream is not an error of the computation.
            let _ = writeln!(
                std::io::stdout().lock(),
                "{}",
                render::render(&report.value, flags.format)
            );
            if report.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                for f in &report.failures {
                    eprintln!("verification failed: {f}");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
