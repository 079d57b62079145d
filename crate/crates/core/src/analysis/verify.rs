//! Invariant suite over random playouts.

use serde::Serialize;

use super::lemma_checker;
use crate::engine::{apply_move, monovariant, validate_transition, GameState, MoveKind};
use crate::error::Result;
use crate::fib::zeckendorf;
use crate::strategy::{Policy, RandomPolicy};

/// Test hook for checking that the suite notices a broken engine.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum FaultInjection {
    #[default]
    None,
    /// The first move of the first non-trivial game leaves the state
    /// unchanged instead of applying the move.
    FrozenMove,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: u64,
    pub playouts: u64,
    pub seed: u64,
    pub games: u64,
    pub moves: u64,
    pub lemma_runs: u64,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every `n` in `1..=n_max`, plays `playouts` uniform random games and
/// checks termination at the Zeckendorf decomposition, the monovariant
/// (start value, strict decrease, exact per-move decrement), the length
/// bound `n(n-1)/2`, the merge count `n - Z(n)` and the non-switch bound
/// `3n + 1`; then runs the LGS repetition checker for `n >= 2`.
///
/// Game `p` for start value `n` uses stream `(n << 32) | p` of `seed`.
pub fn verify_playouts(
    n_max: u64,
    playouts: u64,
    seed: u64,
    fault: FaultInjection,
) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        n_max,
        playouts,
        seed,
        games: 0,
        moves: 0,
        lemma_runs: 0,
        violations: Vec::new(),
    };
    let mut fault_pending = fault == FaultInjection::FrozenMove;
    for n in 1..=n_max {
        let target = zeckendorf(n)?;
        let merges_expected = n - target.len() as u64;
        let max_len = n * (n - 1) / 2;
        for p in 0..playouts {
            let mut policy = RandomPolicy::new(seed, (n << 32) | p);
            let mut state = GameState::initial(n)?;
            let mut f = monovariant(&state);
            let tag = |msg: String| format!("n={n} playout={p}: {msg}");
            if f != (n as u128) * (n as u128 + 1) / 2 {
                report.violations.push(tag(format!("initial monovariant {f}")));
            }
            let (mut length, mut merges, mut non_switch) = (0u64, 0u64, 0u64);
            let mut broken = false;
            while let Some(m) = policy.next_move(&state) {
                let next = if fault_pending {
                    fault_pending = false;
                    state.clone()
                } else {
                    apply_move(&state, m)?
                };
                if !validate_transition(&state, m, &next) {
                    report
                        .violations
                        .push(tag(format!("invalid transition {state} --{m}--> {next}")));
                    broken = true;
                    break;
                }
                let f_next = monovariant(&next);
                if f_next >= f {
                    report.violations.push(tag(format!("monovariant {f} -> {f_next}")));
                    broken = true;
                    break;
                }
                f = f_next;
                length += 1;
                if m.kind.is_merge() {
                    merges += 1;
                }
                if m.kind != MoveKind::Switch {
                    non_switch += 1;
                }
                if length > max_len {
                    report.violations.push(tag(format!("length exceeds {max_len}")));
                    broken = true;
                    break;
                }
                state = next;
            }
            report.games += 1;
            report.moves += length;
            if broken {
                continue;
            }
            if state.indices() != target.as_slice() {
                report
                    .violations
                    .push(tag(format!("ended at {state}, expected Zeckendorf form")));
            }
            if merges != merges_expected {
                report
                    .violations
                    .push(tag(format!("{merges} merges, expected {merges_expected}")));
            }
            if non_switch > 3 * n + 1 {
                report
                    .violations
                    .push(tag(format!("{non_switch} non-switch moves exceed 3n+1")));
            }
        }
        if n >= 2 {
            let lemma = lemma_checker(n)?;
            report.lemma_runs += 1;
            report.violations.extend(
                lemma
                    .violations
                    .into_iter()
                    .map(|v| format!("n={n} lgs move {}: {} at {}", v.move_number, v.reason, v.state)),
            );
        }
    }
    Ok(report)
}
