//! Move-selection policies and the validating game runner.

mod lgs;
mod random;
mod shortest;

pub use lgs::{lgs_length, lgs_next, CompressedLgs, Lgs, MacroStep, SwitchOrder};
pub use random::{playout_length, playout_rng, random_next, PlayoutRng, RandomPolicy};
pub use shortest::{shortest_game, shortest_moves};

use crate::engine::{legal_moves, monovariant, validate_transition, GameState, Move};
use crate::error::{Error, Result};

/// A move-selection rule. `next_move` must return a legal move, or `None`
/// exactly when the state is terminal.
pub trait Policy {
    /// Identifier written to record lines.
    fn name(&self) -> &str;

    fn next_move(&mut self, s: &GameState) -> Option<Move>;

    /// Seed of the policy's random stream, for replayable records.
    fn seed(&self) -> Option<u64> {
        None
    }
}

/// A complete game from `n` ones to the Zeckendorf decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRecord {
    pub n: u64,
    pub policy: String,
    pub seed: Option<u64>,
    pub moves: Vec<Move>,
    /// Snapshots of every state including the initial one, when requested.
    pub states: Option<Vec<GameState>>,
    /// `f(S)` for the initial state and after every move.
    pub monovariants: Vec<u128>,
    pub final_state: GameState,
}

impl GameRecord {
    pub fn length(&self) -> usize {
        self.moves.len()
    }
}

/// Plays `p` from the initial state of `n` until terminal, validating every
/// transition.
pub fn run_game(n: u64, p: &mut dyn Policy, record_states: bool) -> Result<GameRecord> {
    let mut state = GameState::initial(n)?;
    let mut moves = Vec::new();
    let mut states = record_states.then(|| vec![state.clone()]);
    let mut monovariants = vec![monovariant(&state)];
    let mut legal = Vec::new();

    loop {
        state.legal_moves_into(&mut legal);
        let Some(m) = p.next_move(&state) else {
            if !legal.is_empty() {
                return Err(Error::InvalidState(format!(
                    "policy `{}` stopped at non-terminal state {state}",
                    p.name()
                )));
            }
            break;
        };
        if !legal.contains(&m) {
            return Err(Error::PolicyViolation {
                policy: p.name().to_string(),
                mv: m,
                state: state.to_string(),
            });
        }
        let next = crate::engine::apply_move(&state, m)?;
        check_transition(&state, m, &next)?;
        monovariants.push(monovariant(&next));
        moves.push(m);
        if let Some(v) = states.as_mut() {
            v.push(next.clone());
        }
        state = next;
    }

    Ok(GameRecord {
        n,
        policy: p.name().to_string(),
        seed: p.seed(),
        moves,
        states,
        monovariants,
        final_state: state,
    })
}

/// Replays a fixed move list from the initial state of `n`, validating each
/// step and requiring the final state to be terminal.
pub fn replay(n: u64, policy: &str, seed: Option<u64>, moves: &[Move]) -> Result<GameRecord> {
    replay_inner(n, policy, seed, moves, false)
}

/// [`replay`] keeping every intermediate state.
pub fn replay_with_states(
    n: u64,
    policy: &str,
    seed: Option<u64>,
    moves: &[Move],
) -> Result<GameRecord> {
    replay_inner(n, policy, seed, moves, true)
}

fn replay_inner(
    n: u64,
    policy: &str,
    seed: Option<u64>,
    moves: &[Move],
    record_states: bool,
) -> Result<GameRecord> {
    let mut state = GameState::initial(n)?;
    let mut states = record_states.then(|| vec![state.clone()]);
    let mut monovariants = vec![monovariant(&state)];
    for &m in moves {
        let next = crate::engine::apply_move(&state, m)?;
        check_transition(&state, m, &next)?;
        monovariants.push(monovariant(&next));
        if let Some(v) = states.as_mut() {
            v.push(next.clone());
        }
        state = next;
    }
    if !legal_moves(&state).is_empty() {
        return Err(Error::InvalidState(format!(
            "replay of {} moves ends at non-terminal {state}",
            moves.len()
        )));
    }
    Ok(GameRecord {
        n,
        policy: policy.to_string(),
        seed,
        moves: moves.to_vec(),
        states,
        monovariants,
        final_state: state,
    })
}

fn check_transition(s: &GameState, m: Move, next: &GameState) -> Result<()> {
    if validate_transition(s, m, next) {
        Ok(())
    } else {
        Err(Error::InvalidTransition {
            from: s.to_string(),
            mv: m,
            to: next.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::MoveKind;

    struct Stubborn;

    impl Policy for Stubborn {
        fn name(&self) -> &str {
            "stubborn"
        }
        fn next_move(&mut self, _s: &GameState) -> Option<Move> {
            Some(Move::new(MoveKind::Switch, 1))
        }
    }

    struct Quitter;

    impl Policy for Quitter {
        fn name(&self) -> &str {
            "quitter"
        }
        fn next_move(&mut self, _s: &GameState) -> Option<Move> {
            None
        }
    }

    #[test]
    fn policy_violations_are_errors() {
        assert!(matches!(
            run_game(3, &mut Stubborn, false),
            Err(Error::PolicyViolation { .. })
        ));
        assert!(matches!(
            run_game(3, &mut Quitter, false),
            Err(Error::InvalidState(_))
        ));
        // n = 1 is terminal, so stopping immediately is correct
        assert_eq!(run_game(1, &mut Quitter, false).unwrap().length(), 0);
    }

    #[test]
    fn record_states_and_monovariants() {
        let r = run_game(4, &mut Lgs::default(), true).unwrap();
        let states = r.states.as_ref().unwrap();
        assert_eq!(states.len(), r.length() + 1);
        assert_eq!(r.monovariants.len(), r.length() + 1);
        assert!(r.monovariants.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(states.last().unwrap(), &r.final_state);
    }

    #[test]
    fn replay_round_trip() {
        let r = run_game(9, &mut Lgs::default(), false).unwrap();
        let again = replay(9, "lgs", None, &r.moves).unwrap();
        assert_eq!(again, r);
        assert!(replay(9, "lgs", None, &r.moves[..3]).is_err());
    }
}
