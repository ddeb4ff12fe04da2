//! `paramkit`: solve, kernelize, generate, bench and oracle subcommands.
//!
//! Every command prints JSON lines. `solve` and `kernelize` exit with 0 on
//! YES, 1 on NO and 2 on usage or format errors.

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "paramkit", version, about = "Fixed-parameter algorithms for graph problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an instance with a chosen algorithm.
    Solve(SolveArgs),
    /// Reduce an instance to a kernel and report its size against the bound.
    Kernelize(KernelizeArgs),
    /// Write a generated graph (or triple system) in its text format.
    Generate(GenerateArgs),
    /// Run a benchmark suite and emit one record per instance and algorithm.
    Bench(BenchArgs),
    /// Exact optimum by brute force, for small instances.
    Oracle(OracleArgs),
}

#[derive(clap::Args, Debug)]
pub struct SolveArgs {
    /// vc, ds, kpath, 3col, maxleaf, tripack, 3dm or nonblocker.
    pub problem: String,
    /// Edge-list graph, or a triple system for 3dm.
    pub input: PathBuf,
    #[arg(long)]
    pub algorithm: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Failure probability for color-coding.
    #[arg(long, default_value_t = 0.01)]
    pub delta: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Branch decomposition for decomp-dp.
    #[arg(long)]
    pub bd: Option<PathBuf>,
    /// Degree bound for ds; defaults to the maximum degree.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(clap::Args, Debug)]
pub struct KernelizeArgs {
    /// vc, nonblocker, maxleaf or 3dm.
    pub problem: String,
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Where to write the reduced instance. Defaults to `<input stem>.kernel.<ext>`.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct GenerateArgs {
    /// `path:5`, `cycle:6`, `star:3`, `complete:4`, `grid:2x3`,
    /// `random:N:M:SEED`, `planted:N:M:K:SEED` or `triples:A:B:C:M:SEED`.
    pub kind: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct BenchArgs {
    /// vc-branching, kernel-sizes, colorcode-stats or dp-vs-oracle.
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct OracleArgs {
    pub problem: String,
    pub input: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => commands::solve(&a),
        Command::Kernelize(a) => commands::kernelize(&a),
        Command::Generate(a) => commands::generate(&a),
        Command::Bench(a) => commands::bench(&a),
        Command::Oracle(a) => commands::oracle(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
