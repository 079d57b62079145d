//! Repetitions among higher-index terms (indices >= 3) under LGS.
//!
//! At a checkpoint (no switch and no merge-ones legal, so the tuple is
//! nondecreasing with at most one `F_1`) the higher-index terms may contain
//! at most one adjacent repeat, and only as:
//!
//! 1. `3, 3, >=4, ...` at the start,
//! 2. `4, 4, >=5, ...` at the start,
//! 3. `..., j-x, j, j, >=j+1, ...` with `x >= 3` (or nothing before `j, j`).
//!
//! Consecutive checkpoints must move along the edges
//! `N->N, N->1, 1->N, 1->2, 2->N, 2->3, 3->N, 3->3`. That graph is derived
//! for positions with at least two `F_2` terms, so transitions are checked
//! only when the earlier checkpoint has two or more copies of `F_2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::strategy::CompressedLgs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LemmaState {
    NoRepetitions,
    State1,
    State2,
    State3,
}

impl LemmaState {
    fn short(self) -> &'static str {
        match self {
            LemmaState::NoRepetitions => "N",
            LemmaState::State1 => "1",
            LemmaState::State2 => "2",
            LemmaState::State3 => "3",
        }
    }
}

/// Classifies a sorted run of higher-index terms, or explains why it has
/// none of the allowed shapes.
pub fn classify_higher(terms: &[u8]) -> Result<LemmaState, String> {
    if let Some(p) = terms.windows(2).position(|w| w[1] < w[0]) {
        return Err(format!("higher-index terms decrease at offset {p}"));
    }
    let repeats: Vec<usize> = terms
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == w[1])
        .map(|(p, _)| p)
        .collect();
    let p = match repeats.as_slice() {
        [] => return Ok(LemmaState::NoRepetitions),
        [p] => *p,
        _ => return Err(format!("{} repetitions among higher-index terms", repeats.len())),
    };
    let j = terms[p];
    match (p, j) {
        (0, 3) => Ok(LemmaState::State1),
        (0, 4) => Ok(LemmaState::State2),
        (0, _) => Ok(LemmaState::State3),
        _ if j >= 5 && terms[p - 1] + 3 <= j => Ok(LemmaState::State3),
        _ => Err(format!(
            "repeated F_{j} preceded by F_{} (gap {} < 3)",
            terms[p - 1],
            j - terms[p - 1]
        )),
    }
}

pub fn is_allowed_transition(from: LemmaState, to: LemmaState) -> bool {
    use LemmaState::*;
    matches!(
        (from, to),
        (NoRepetitions, NoRepetitions)
            | (NoRepetitions, State1)
            | (State1, NoRepetitions)
            | (State1, State2)
            | (State2, NoRepetitions)
            | (State2, State3)
            | (State3, NoRepetitions)
            | (State3, State3)
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    #[serde(rename = "move")]
    pub move_number: u64,
    pub state: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaCheckpointReport {
    pub n: u64,
    #[serde(rename = "checkpoints")]
    pub checkpoints_examined: u64,
    pub transitions_checked: u64,
    pub violations: Vec<LemmaViolation>,
    /// Label per checkpoint; `None` where the checkpoint itself violated
    /// the allowed shapes.
    #[serde(skip)]
    pub state_labels: Vec<Option<LemmaState>>,
}

impl LemmaCheckpointReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lemma reports always serialize")
    }
}

/// Runs LGS from `n` and checks every checkpoint and checkpoint transition.
pub fn lemma_checker(n: u64) -> Result<LemmaCheckpointReport> {
    if n < 2 {
        return Err(Error::StartTooSmall { n, min: 2 });
    }
    let mut game = CompressedLgs::new(n)?;
    let mut report = LemmaCheckpointReport {
        n,
        checkpoints_examined: 0,
        transitions_checked: 0,
        violations: Vec::new(),
        state_labels: Vec::new(),
    };
    // label and F_2 count of the previous checkpoint
    let mut prev: Option<(Option<LemmaState>, u64)> = None;
    loop {
        if game.is_checkpoint() {
            report.checkpoints_examined += 1;
            let label = match classify_higher(&game.higher_terms()) {
                Ok(l) => Some(l),
                Err(reason) => {
                    report.violations.push(LemmaViolation {
                        move_number: game.moves(),
                        state: game.to_state().to_string(),
                        reason,
                    });
                    None
                }
            };
            if let (Some((Some(from), twos)), Some(to)) = (prev, label) {
                if twos >= 2 {
                    report.transitions_checked += 1;
                    if !is_allowed_transition(from, to) {
                        report.violations.push(LemmaViolation {
                            move_number: game.moves(),
                            state: game.to_state().to_string(),
                            reason: format!(
                                "transition {} -> {} is not in the state graph",
                                from.short(),
                                to.short()
                            ),
                        });
                    }
                }
            }
            report.state_labels.push(label);
            prev = Some((label, game.counts()[2]));
        }
        if game.step().is_none() {
            break;
        }
    }
    Ok(report)
}
