//! Shared inputs for the criterion benchmarks.

use zeckgame_core::{strategy::CompressedLgs, GameState};

/// A mid-game LGS position from `n`, reached after `steps` non-switch moves.
pub fn lgs_position(n: u64, steps: usize) -> GameState {
    let mut g = CompressedLgs::new(n).expect("valid start value");
    for _ in 0..steps {
        if g.step().is_none() {
            break;
        }
    }
    g.to_state()
}
