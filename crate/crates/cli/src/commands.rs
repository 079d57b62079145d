use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use zeckgame_core::analysis::{
    bounds_report, fit_lognormal, lemma_checker, ratio_csv, ratio_series, simulate_random,
    verify_playouts, FaultInjection,
};
use zeckgame_core::record::RecordLine;
use zeckgame_core::solver::{solve_n, SolveOptions};
use zeckgame_core::strategy::{run_game, shortest_game, Lgs, RandomPolicy, SwitchOrder};
use zeckgame_core::{Error, GameRecord};

use crate::play::{play_session, Opponent};
use crate::{exit, Cli, Command, FirstArg, OpponentArg, PolicyArg};

pub(crate) fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Solve(a) => {
            let opts = SolveOptions {
                memo_limit: a.memo_limit,
                principal_variation: !a.no_pv,
                parallel: false,
            };
            let result = solve_n(a.n, &opts).map_err(|e| match e {
                Error::Capacity { limit } => anyhow::Error::new(e).context(format!(
                    "solve --n {} needs more than --memo-limit {limit} states (also settable via ZECKGAME_MEMO_LIMIT)",
                    a.n
                )),
                e => e.into(),
            })?;
            println!("{}", result.to_json());
            if cli.verbose > 0 {
                eprintln!("{} states explored, {} memo entries", result.states_explored, result.memo_entries);
            }
            Ok(exit::OK)
        }
        Command::Run(a) => {
            let record = match a.policy {
                PolicyArg::Lgs => run_game(a.n, &mut Lgs::new(SwitchOrder::Leftmost), a.trace)?,
                PolicyArg::LgsRightmost => run_game(a.n, &mut Lgs::new(SwitchOrder::Rightmost), a.trace)?,
                PolicyArg::Random => run_game(a.n, &mut RandomPolicy::new(a.seed, 0), a.trace)?,
                PolicyArg::Shortest => {
                    let r = shortest_game(a.n)?;
                    if a.trace {
                        zeckgame_core::strategy::replay_with_states(a.n, "shortest", None, &r.moves)?
                    } else {
                        r
                    }
                }
            };
            let stdout = io::stdout();
            let mut out = stdout.lock();
            if a.trace {
                write_trace(&mut out, &record)?;
            }
            if a.json {
                writeln!(out, "{}", RecordLine::from(&record).to_json())?;
            } else {
                writeln!(
                    out,
                    "n={} policy={} length={} final={}",
                    record.n,
                    record.policy,
                    record.length(),
                    record.final_state
                )?;
            }
            Ok(exit::OK)
        }
        Command::Simulate(a) => {
            let hist = with_threads(a.threads, || simulate_random(a.n, a.trials, a.seed))??;
            let fit = fit_lognormal(&hist)?;
            let summary = serde_json::to_string(&hist.summary(&fit))?;
            if let Some(path) = &a.out {
                write_file(path, &hist.to_csv())?;
                write_file(&sidecar_path(path), &format!("{summary}\n"))?;
            }
            println!("{summary}");
            Ok(exit::OK)
        }
        Command::Bounds(a) => {
            if let Some(n) = a.n {
                println!("{}", serde_json::to_string(&bounds_report(n)?)?);
                return Ok(exit::OK);
            }
            anyhow::ensure!(a.n_min <= a.n_max, "--n-min must not exceed --n-max");
            let ns: Vec<u64> = (a.n_min..=a.n_max).step_by(a.step as usize).collect();
            let points = with_threads(a.threads, || ratio_series(&ns))??;
            let csv = ratio_csv(&points);
            match &a.out {
                Some(path) => write_file(path, &csv)?,
                None => print!("{csv}"),
            }
            Ok(exit::OK)
        }
        Command::Verify(a) => {
            let fault = if a.inject_fault {
                FaultInjection::FrozenMove
            } else {
                FaultInjection::None
            };
            let report = verify_playouts(a.n_max, a.playouts, a.seed, fault)?;
            for v in &report.violations {
                eprintln!("violation: {v}");
            }
            println!(
                "verified n=1..={} with {} playouts each: {} games, {} moves, {} LGS lemma runs, {} violations",
                report.n_max,
                report.playouts,
                report.games,
                report.moves,
                report.lemma_runs,
                report.violations.len()
            );
            Ok(if report.is_clean() { exit::OK } else { exit::VIOLATION })
        }
        Command::Lemma(a) => {
            let report = lemma_checker(a.n)?;
            println!("{}", report.to_json());
            Ok(if report.is_clean() { exit::OK } else { exit::VIOLATION })
        }
        Command::Play(a) => {
            let opponent = match a.opponent {
                OpponentArg::Optimal => Opponent::Optimal { memo_limit: a.memo_limit },
                OpponentArg::Lgs => Opponent::Lgs,
                OpponentArg::Random => Opponent::Random { seed: a.seed },
            };
            let stdin = io::stdin();
            let stdout = io::stdout();
            play_session(
                a.n,
                opponent,
                a.first == FirstArg::Human,
                stdin.lock(),
                stdout.lock(),
            )?;
            Ok(exit::OK)
        }
    }
}

fn write_trace(out: &mut impl Write, record: &GameRecord) -> Result<()> {
    let states = record
        .states
        .as_ref()
        .context("trace requested without recorded states")?;
    writeln!(out, "0 start {} f={}", states[0], record.monovariants[0])?;
    for (i, m) in record.moves.iter().enumerate() {
        writeln!(out, "{} {} {} f={}", i + 1, m, states[i + 1], record.monovariants[i + 1])?;
    }
    Ok(())
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .context("building worker pool")?;
            Ok(pool.install(f))
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// `h.csv` -> `h.json`
fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}
