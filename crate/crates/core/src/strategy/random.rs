//! Uniform random play with reproducible per-game streams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Policy;
use crate::engine::{GameState, Move};
use crate::error::Result;

pub type PlayoutRng = ChaCha8Rng;

/// The random stream for game `stream` under `seed`. Streams are
/// independent of scheduling, so trial `t` always sees the same moves.
pub fn playout_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform choice among the legal moves of `s`.
pub fn random_next<R: Rng + ?Sized>(s: &GameState, rng: &mut R) -> Option<Move> {
    let mut legal = Vec::new();
    s.legal_moves_into(&mut legal);
    pick(&legal, rng)
}

fn pick<R: Rng + ?Sized>(legal: &[Move], rng: &mut R) -> Option<Move> {
    if legal.is_empty() {
        None
    } else {
        Some(legal[rng.random_range(0..legal.len())])
    }
}

#[derive(Debug, Clone)]
pub struct RandomPolicy {
    seed: u64,
    rng: ChaCha8Rng,
    legal: Vec<Move>,
}

impl RandomPolicy {
    /// Policy for game `stream` under master seed `seed`.
    pub fn new(seed: u64, stream: u64) -> Self {
        RandomPolicy {
            seed,
            rng: playout_rng(seed, stream),
            legal: Vec::new(),
        }
    }
}

impl Policy for RandomPolicy {
    fn name(&self) -> &str {
        "random"
    }

    fn next_move(&mut self, s: &GameState) -> Option<Move> {
        s.legal_moves_into(&mut self.legal);
        pick(&self.legal, &mut self.rng)
    }

    fn seed(&self) -> Option<u64> {
        Some(self.seed)
    }
}

/// Length of one uniform random game, without recording or validation.
/// Makes the same choices as [`RandomPolicy`] on the same stream.
pub fn playout_length<R: Rng + ?Sized>(n: u64, rng: &mut R) -> Result<u64> {
    let mut state = GameState::initial(n)?;
    let mut legal = Vec::with_capacity(state.len());
    let mut length = 0;
    loop {
        state.legal_moves_into(&mut legal);
        let Some(m) = pick(&legal, rng) else {
            return Ok(length);
        };
        state.apply_mut(m).expect("chosen move is legal");
        length += 1;
    }
}
