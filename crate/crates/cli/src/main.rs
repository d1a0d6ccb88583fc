use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use inclust_core::encode::Metric;
use inclust_core::solve::SolverBudget;
use inclust_core::Variant;

mod commands;
mod generate;

/// Exit statuses: 0 YES (or success), 1 NO or failed verification,
/// 2 budget exhausted, 3 usage errors, 4 unreadable or malformed input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    No,
    Exhausted,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::No => 1,
            Status::Exhausted => 2,
        }
    }
}

const USAGE_ERROR: u8 = 3;
const INPUT_ERROR: u8 = 4;

/// A request the tool cannot honour, as opposed to bad input data.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

#[derive(Parser)]
#[command(name = "inclust", version, about = "Clustering of incomplete Boolean and q-ary matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a minimum row/column cover of the MISSING entries.
    Cover {
        instance: PathBuf,
        #[command(flatten)]
        read: ReadOpts,
    },
    /// Kernelize a Boolean instance; print the report and optionally write the kernel.
    Kernelize {
        instance: PathBuf,
        /// Where to write the reduced instance file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        read: ReadOpts,
    },
    /// Decide an instance and print a report with the witness.
    Solve {
        instance: PathBuf,
        /// Kernelize first, solve the kernel and lift its witness.
        #[arg(long)]
        via_kernel: bool,
        /// Override the metric of a q-ary instance.
        #[arg(long)]
        metric: Option<Metric>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        read: ReadOpts,
    },
    /// Check the witness of a report against an instance.
    Verify { instance: PathBuf, report: PathBuf },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        generator: generate::Generator,
        /// Where to write the instance (stdout if absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        /// Where to write the ground-truth sidecar, when the truth is known.
        #[arg(long, global = true)]
        truth: Option<PathBuf>,
    },
    /// Solve every instance in the given files and directories (`*.inst`).
    Bench {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        via_kernel: bool,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        read: ReadOpts,
    },
}

#[derive(Args, Clone, Copy)]
struct ReadOpts {
    /// Keep duplicate rows instead of collapsing them.
    #[arg(long)]
    keep_duplicates: bool,
}

#[derive(Args, Clone, Copy)]
struct BudgetOpts {
    /// Most completions the exhaustive search may enumerate.
    #[arg(long, env = "INCLUST_MAX_COMPLETIONS", default_value_t = SolverBudget::default().max_completions)]
    budget_completions: u64,
    /// Most center subsets or candidate centers the solvers may consider.
    #[arg(long, env = "INCLUST_MAX_CENTERS", default_value_t = SolverBudget::default().max_center_tuples)]
    budget_centers: u64,
}

impl BudgetOpts {
    fn budget(self) -> SolverBudget {
        SolverBudget { max_completions: self.budget_completions, max_center_tuples: self.budget_centers, time_hint: None }
    }
}

pub fn variant_arg(s: &str) -> Result<Variant, String> {
    s.parse::<Variant>().map_err(|e| e.to_string())
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Cover { instance, read } => commands::cover(&instance, read.keep_duplicates),
        Command::Kernelize { instance, output, read } => {
            commands::kernelize(&instance, output.as_deref(), read.keep_duplicates)
        }
        Command::Solve { instance, via_kernel, metric, report, budget, read } => commands::solve(
            &instance,
            &commands::SolveOpts { via_kernel, metric, budget: budget.budget(), keep_duplicates: read.keep_duplicates },
            report.as_deref(),
        ),
        Command::Verify { instance, report } => commands::verify(&instance, &report),
        Command::Gen { generator, output, truth } => generate::run(&generator, output.as_deref(), truth.as_deref()),
        Command::Bench { paths, jobs, via_kernel, budget, read } => commands::bench(
            &paths,
            jobs,
            &commands::SolveOpts { via_kernel, metric: None, budget: budget.budget(), keep_duplicates: read.keep_duplicates },
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::from(INPUT_ERROR)
            }
        }
    }
}
