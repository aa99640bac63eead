use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quiver_moduli::problem::Problem;
use quiver_moduli::report::{self, Report};
use quiver_moduli::Result;

/// Numerical invariants of quiver bundle moduli, with an exact genus-0 verifier.
#[derive(Parser)]
#[command(name = "quiver-moduli", version)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Problem file (JSON).
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Euler form χ(t, t) with its per-vertex and per-arrow terms.
    Euler(Input),
    /// Expected dimension 1 − χ(t, t).
    Dim(Input),
    /// Whether α lies in the smoothness region.
    Smooth(Input),
    /// Walls from candidate subtypes in a degree window.
    Walls {
        #[command(flatten)]
        input: Input,
        /// `lo..hi` for every vertex, or one `lo..hi` per vertex separated by commas.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// Exact hypercohomology checks on the line.
    OracleVerify {
        /// Problem file with a bundle section; omit with --random.
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Verify seeded random instances instead of a file.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0, requires = "random")]
        seed: u64,
        #[arg(long, default_value_t = 200, requires = "random")]
        count: u64,
        /// Max vertices, max rank, max |summand degree|.
        #[arg(long, default_value = "3,3,4", requires = "random")]
        limits: String,
    },
    /// α-stability of the bundle (exact in rank one, split search otherwise).
    Stability(Input),
}

fn load(path: &PathBuf) -> Result<Problem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| quiver_moduli::Error::Parse(format!("{}: {e}", path.display())))?;
    Problem::from_json(&text).map_err(|e| match e {
        quiver_moduli::Error::Parse(m) => {
            quiver_moduli::Error::Parse(format!("{}: {m}", path.display()))
        }
        other => other,
    })
}

fn emit<R: Report>(report: R, json: bool) -> ExitCode {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        );
    } else {
        print!("{}", report.render());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    Ok(match cli.command {
        Command::Euler(i) => emit(report::euler_report(&load(&i.file)?)?, json),
        Command::Dim(i) => emit(report::dim_report(&load(&i.file)?)?, json),
        Command::Smooth(i) => emit(report::smooth_report(&load(&i.file)?)?, json),
        Command::Walls { input, window } => {
            emit(report::walls_report(&load(&input.file)?, &window)?, json)
        }
        Command::OracleVerify { file: Some(f), .. } => {
            emit(report::oracle_report(&load(&f)?)?, json)
        }
        Command::OracleVerify {
            file: None,
            seed,
            count,
            limits,
            ..
        } => {
            let limits = report::parse_limits(&limits)?;
            emit(report::oracle_random_report(seed, count, limits)?, json)
        }
        Command::Stability(i) => emit(report::stability_report(&load(&i.file)?)?, json),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
