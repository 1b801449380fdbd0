use std::path::PathBuf;
use std::process::ExitCode;

use antf_cli::{render, run, Command, OutputFormat, RunConfig, Theorem};
use clap::Parser;

/// Associated primes of powers of monomial ideals: edge ideals, facet
/// ideals of special odd cycles and t-spread principal Borel ideals.
///
/// Exit status: 0 on success, 1 on a MISMATCH, 2 on a usage error, 3 when
/// the budget ran out, 4 on any other error.
#[derive(Debug, Parser)]
#[command(name = "antf", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Input file starting with `graph <n>`, `complex <n>` or `tspread ...`.
    input: PathBuf,

    /// Highest power to compute.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    kmax: u32,

    /// Wall-clock budget for the oracle, in seconds.
    #[arg(long, env = "ANTF_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,

    /// Step budget for the oracle's witness search.
    #[arg(long)]
    budget_steps: Option<u64>,

    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,

    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// Closed form to check against.
    #[arg(long, value_enum, default_value_t = Theorem::Auto)]
    which: Theorem,

    /// Accept disconnected graphs and work component by component.
    #[arg(long)]
    composite: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        OutputFormat::Json
    } else {
        OutputFormat::Text
    };
    let config = RunConfig {
        command: cli.command,
        input: cli.input,
        kmax: cli.kmax,
        budget_seconds: cli.budget_seconds,
        budget_steps: cli.budget_steps,
        format,
        threads: cli.threads,
        which: cli.which,
        composite: cli.composite,
    };
    match run(&config) {
        Ok(report) => {
            print!("{}", render(&report, format));
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}
