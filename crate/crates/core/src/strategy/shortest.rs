//! Shortest game: `n - Z(n)` merges and nothing else.
//!
//! The largest Zeckendorf summand `F_l` is built from the rightmost `F_l`
//! ones, then the same construction runs on the ones to its left. A block
//! of `F_l` ones becomes `F_l` by building `F_{l-1}` from its right part,
//! `F_{l-2}` from its left part and merging the two.

use super::{replay, GameRecord};
use crate::engine::{Move, MoveKind};
use crate::error::Result;
use crate::fib::{zeckendorf, FIB};

/// Move list of the shortest game from `n`.
pub fn shortest_moves(n: u64) -> Result<Vec<Move>> {
    let summands = zeckendorf(n)?;
    let mut moves = Vec::with_capacity(n as usize);
    // after building a summand, the ones left of it start at position 1
    let mut width = n;
    for &l in summands.iter().rev() {
        let size = FIB[l as usize];
        build(width - size, l, &mut moves);
        width -= size;
    }
    Ok(moves)
}

/// Emits the merges turning the `F_l` ones starting at 0-based `start` into
/// a single `F_l` at `start`.
fn build(start: u64, l: u8, moves: &mut Vec<Move>) {
    match l {
        1 => {}
        2 => moves.push(Move::new(MoveKind::MergeOnes, start as usize + 1)),
        _ => {
            let left = FIB[l as usize - 2];
            build(start + left, l - 1, moves);
            build(start, l - 2, moves);
            moves.push(Move::new(MoveKind::Merge, start as usize + 1));
        }
    }
}

/// The shortest game from `n`, replayed and validated through the engine.
pub fn shortest_game(n: u64) -> Result<GameRecord> {
    replay(n, "shortest", None, &shortest_moves(n)?)
}
