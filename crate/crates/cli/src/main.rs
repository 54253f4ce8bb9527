//! `dualfb`: design, verify, sweep and render committee dual filters.

mod commands;
mod exit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dualfb_core::algebra::Rational;

use crate::exit::CliError;

#[derive(Debug, Parser)]
#[command(name = "dualfb", version, about = "Exact committee dual-filter design and wavelet filter bank completion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the dual of a lowpass filter and complete it into a filter bank.
    Design(DesignArgs),
    /// Check a filter bank JSON file for perfect reconstruction and the
    /// wavelet property.
    Verify {
        /// Filter bank JSON as written by `design --out`.
        bank: PathBuf,
    },
    /// Render a scaling function by the cascade algorithm.
    Cascade(CascadeArgs),
    /// Tabulate the construction over a range of family parameters.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    BurtAdelson,
}

#[derive(Debug, Args)]
struct DesignArgs {
    /// Compression lowpass h as filter JSON.
    #[arg(long = "h", value_name = "FILE", conflicts_with_all = ["family", "a"], required_unless_present = "family")]
    h: Option<PathBuf>,
    /// Built-in family for h.
    #[arg(long, value_enum, requires = "a")]
    family: Option<Family>,
    /// Family parameter as num/den.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, requires = "family")]
    a: Option<Rational>,
    /// Cofilter f as filter JSON; found by the Euclidean algorithm if omitted.
    #[arg(long = "f", value_name = "FILE")]
    f: Option<PathBuf>,
    /// Prediction filter g as filter JSON, or `same-as-h`.
    #[arg(long = "g", value_name = "FILE|same-as-h", default_value = "same-as-h")]
    g: String,
    /// Where to write the completed filter bank JSON.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Where to write the dual filter JSON.
    #[arg(long, value_name = "FILE")]
    dual_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CascadeArgs {
    /// Lowpass filter JSON.
    #[arg(long, value_name = "FILE")]
    filter: PathBuf,
    /// Number of refinement steps J ≥ 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    iters: u32,
    /// Output CSV path.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// First parameter, num/den.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a_from: Rational,
    /// Last parameter, num/den (inclusive).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a_to: Rational,
    /// Number of equally spaced grid points.
    #[arg(long)]
    steps: u32,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: dualfb_core::algebra::AlgebraError| e.to_string())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Design(args) => commands::design(args),
        Command::Verify { bank } => commands::verify(&bank),
        Command::Cascade(args) => commands::cascade(args),
        Command::Sweep(args) => commands::sweep(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(exit::USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
