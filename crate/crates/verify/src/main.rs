use clap::Parser;
use e8_verify::{run, Arith, Case, Format};
use std::path::PathBuf;
use std::process::ExitCode;

/// Runs the registered verification suites over the exact algebra model
/// and emits a report mapping each check to its citation.
#[derive(Parser)]
#[command(name = "e8-verify", version, about)]
struct Args {
    /// Which suite to run: omega4, upsilon, kappa3, kappa4, epsilon4,
    /// g14, bracket, or all
    #[arg(long, default_value = "all")]
    case: String,

    /// Arithmetic realization: exact (authoritative) or float
    #[arg(long, default_value = "exact")]
    arith: String,

    /// Seed for the randomized exact samples
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of randomized trials for the Jacobi suite
    #[arg(long, default_value_t = 10_000)]
    trials: u64,

    /// Output format: text or json
    #[arg(long, default_value = "text")]
    format: String,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let case = match Case::parse(&args.case) {
        Some(c) => c,
        None => {
            eprintln!("unknown case {:?}", args.case);
            return ExitCode::from(2);
        }
    };
    let arith = match args.arith.as_str() {
        "exact" => Arith::Exact,
        "float" => Arith::Float,
        other => {
            eprintln!("unknown arithmetic mode {:?}", other);
            return ExitCode::from(2);
        }
    };
    let format = match args.format.as_str() {
        "text" => Format::Text,
        "json" => Format::Json,
        other => {
            eprintln!("unknown format {:?}", other);
            return ExitCode::from(2);
        }
    };
    let report = run(case, arith, args.seed, args.trials);
    if let Err(e) = report.emit(format, args.out.as_deref()) {
        eprintln!("could not write report: {}", e);
        return ExitCode::from(2);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
