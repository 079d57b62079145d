//! `zeckgame`: solve, play and measure the ordered Zeckendorf game.

mod commands;
mod play;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes.
pub(crate) mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const CAPACITY: u8 = 2;
    pub const USAGE: u8 = 64;
}

#[derive(Debug, Parser)]
#[command(name = "zeckgame", version, about = "Ordered Zeckendorf game toolkit")]
pub(crate) struct Cli {
    /// More diagnostics on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Command {
    /// Decide the winner from n ones under optimal play (last mover wins).
    Solve(SolveArgs),
    /// Play one game with a fixed policy.
    Run(RunArgs),
    /// Histogram of uniform random game lengths with a log-normal fit.
    Simulate(SimulateArgs),
    /// LGS length ratio series, or the full bounds report for one n.
    Bounds(BoundsArgs),
    /// Check the game invariants over random playouts.
    Verify(VerifyArgs),
    /// Check higher-index repetitions along the LGS game.
    Lemma(LemmaArgs),
    /// Play against the engine in the terminal.
    Play(PlayArgs),
}

#[derive(Debug, Args)]
pub(crate) struct SolveArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Maximum number of memoized states.
    #[arg(long, env = "ZECKGAME_MEMO_LIMIT", default_value_t = zeckgame_core::solver::DEFAULT_MEMO_LIMIT)]
    pub memo_limit: usize,
    /// Skip the principal variation.
    #[arg(long)]
    pub no_pv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum PolicyArg {
    Lgs,
    LgsRightmost,
    Shortest,
    Random,
}

#[derive(Debug, Args)]
pub(crate) struct RunArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value = "lgs")]
    pub policy: PolicyArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// One line per move: move, resulting state, monovariant.
    #[arg(long)]
    pub trace: bool,
    /// Print the record as a JSON line.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub(crate) struct SimulateArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Histogram CSV path; the JSON sidecar goes next to it.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub(crate) struct BoundsArgs {
    /// Print the full bounds report for a single n instead of a series.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..), conflicts_with_all = ["n_min", "n_max", "step"])]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(2..))]
    pub n_min: u64,
    #[arg(long, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(2..))]
    pub n_max: u64,
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub step: u64,
    /// Ratio CSV path (default: stdout).
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub(crate) struct VerifyArgs {
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[arg(long, default_value_t = 100)]
    pub playouts: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Negative control: corrupt one transition.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub(crate) struct LemmaArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum OpponentArg {
    Optimal,
    Lgs,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum FirstArg {
    Human,
    Engine,
}

#[derive(Debug, Args)]
pub(crate) struct PlayArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value = "optimal")]
    pub opponent: OpponentArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Who makes the first move.
    #[arg(long, value_enum, default_value = "human")]
    pub first: FirstArg,
    #[arg(long, env = "ZECKGAME_MEMO_LIMIT", default_value_t = zeckgame_core::solver::DEFAULT_MEMO_LIMIT)]
    pub memo_limit: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let capacity = e
                .downcast_ref::<zeckgame_core::Error>()
                .is_some_and(|e| matches!(e, zeckgame_core::Error::Capacity { .. }));
            ExitCode::from(if capacity { exit::CAPACITY } else { exit::VIOLATION })
        }
    }
}
