//! Front end for `antf`: reads a graph, complex or t-spread spec, runs one
//! command and builds a [`Report`].

mod commands;
mod report;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use antf_core::format::{parse_input, Input, ParseError};
use antf_core::graphs::GraphError;
use antf_core::simplicial::SimplicialError;
use antf_core::tspread::TspreadError;
use antf_core::{AlgebraError, Budget};
use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;

pub use report::{
    AssTable, CandidateCheck, CheckStatus, ClassificationReport, ComponentVerdict,
    CompositeVerdict, InputEcho, ObstructionCheck, PowerCheck, ReesReport, Report, Status,
    Verification,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Ass(I^k) for k = 1..kmax via the oracle.
    AssPowers,
    /// Closed-form verdict only.
    Classify,
    /// Closed-form prediction against the oracle, power by power.
    Verify,
    /// Socle-witness oracle against irreducible decomposition.
    OracleCompare,
    /// Symbolic Rees algebra generation test for graphs.
    ReesCheck,
}

/// Which closed form `verify` and `classify` should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Pick from the input kind and degree.
    Auto,
    /// Edge ideals of connected graphs.
    Graph,
    /// Facet ideals of special odd cycles.
    SpecialCycle,
    /// t-spread principal Borel ideals of degree 2.
    Deg2,
    /// t-spread principal Borel ideals of degree 3.
    Tspread,
    /// Only the candidate associated primes of a t-spread ideal.
    Ass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub kmax: u32,
    pub budget_seconds: Option<f64>,
    pub budget_steps: Option<u64>,
    pub format: OutputFormat,
    pub threads: Option<usize>,
    pub which: Theorem,
    /// Allow disconnected graphs by working component by component.
    pub composite: bool,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        Self {
            command,
            input: input.into(),
            kmax: 3,
            budget_seconds: None,
            budget_steps: None,
            format: OutputFormat::Text,
            threads: None,
            which: Theorem::Auto,
            composite: false,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.kmax == 0 {
            return Err(CliError::Config("--kmax must be at least 1".into()));
        }
        if let Some(s) = self.budget_seconds {
            if !(s.is_finite() && s > 0.0) {
                return Err(CliError::Config("--budget-seconds must be positive".into()));
            }
        }
        if self.budget_steps == Some(0) {
            return Err(CliError::Config("--budget-steps must be positive".into()));
        }
        if self.threads == Some(0) {
            return Err(CliError::Config("--threads must be positive".into()));
        }
        Ok(())
    }

    fn budget(&self) -> Budget {
        let mut budget = match self.budget_seconds {
            Some(s) => Budget::with_time(Duration::from_secs_f64(s)),
            None => Budget::unlimited(),
        };
        if let Some(steps) = self.budget_steps {
            budget = budget.and_steps(steps);
        }
        budget
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Config(String),
    #[error("{message} (hint: {hint})")]
    Hypothesis { message: String, hint: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Tspread(#[from] TspreadError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("cannot build thread pool: {0}")]
    ThreadPool(String),
}

/// Reads and parses `config.input`, then runs the command.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(&config.input).map_err(|source| CliError::Io {
        path: config.input.clone(),
        source,
    })?;
    let input = parse_input(&text).map_err(|source| CliError::Parse {
        path: config.input.clone(),
        source,
    })?;
    run_input(config, &input)
}

/// Runs the command on an already parsed input.
pub fn run_input(config: &RunConfig, input: &Input) -> Result<Report, CliError> {
    config.validate()?;
    let start = Instant::now();
    let budget = config.budget();
    let mut report = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::ThreadPool(e.to_string()))?
            .install(|| commands::dispatch(config, input, &budget))?,
        None => commands::dispatch(config, input, &budget)?,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Renders a report in the configured format.
pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => report::render_text(report),
    }
}
