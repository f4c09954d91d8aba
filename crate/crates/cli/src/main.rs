mod commands;
mod corpus;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sinklab_core::{Error, DEFAULT_ORDER_CAP};

/// Right Engel sinks, γ_k-values and Fitting structure of finite groups.
#[derive(Debug, Parser)]
#[command(name = "sinklab", version)]
struct Cli {
    /// Largest group order any construction may reach.
    #[arg(long, global = true, env = "SINKLAB_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,

    /// Omit the timing block from JSON reports.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a group and print a structural summary.
    Build {
        spec: PathBuf,
        /// Also run the O(n³) associativity audit.
        #[arg(long)]
        audit: bool,
    },
    /// Minimal right Engel sink of one element.
    Sink {
        spec: PathBuf,
        /// Element as an index, cycle notation or generator word (`g1^2*g2`).
        #[arg(long)]
        element: String,
    },
    /// The set of γ_k-values.
    Gamma {
        spec: PathBuf,
        #[arg(short, default_value_t = 2)]
        k: usize,
    },
    /// Run lemma checks; exits 1 if any check fails.
    Verify {
        spec: PathBuf,
        /// heineken | centralizer_power | sink_oracle | m1_nilpotent | fitting |
        /// orbit_lemma | simple_product_gamma | all
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(short, default_value_t = 2)]
        k: usize,
    },
    /// Scan a corpus directory and emit one CSV row per group.
    Scan {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sink sizes and Fitting data for inversion_extension(p, r) over a range of ranks.
    Contrast {
        #[arg(short)]
        p: usize,
        /// Inclusive rank range `A..B`.
        #[arg(long, default_value = "1..3")]
        ranks: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Errors that map to a specific exit code.
#[derive(Debug)]
pub(crate) enum Failure {
    ChecksFailed,
    Usage(anyhow::Error),
    Cap(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::CapExceeded { .. }) => Failure::Cap(e),
            _ => Failure::Usage(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Options {
        cap: cli.cap,
        timing: !cli.no_timing,
    };
    let result = match cli.command {
        Command::Build { spec, audit } => commands::build(&opts, &spec, audit),
        Command::Sink { spec, element } => commands::sink(&opts, &spec, &element),
        Command::Gamma { spec, k } => commands::gamma(&opts, &spec, k),
        Command::Verify { spec, check, k } => commands::verify(&opts, &spec, &check, k),
        Command::Scan { corpus, k, out } => commands::scan(&opts, &corpus, k, out.as_deref()),
        Command::Contrast { p, ranks, out } => commands::contrast(&opts, p, &ranks, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
