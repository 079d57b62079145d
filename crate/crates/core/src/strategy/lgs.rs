//! The Long Game Strategy (LGS).
//!
//! Priorities, highest first: any switch; merge ones, leftmost; split or
//! split twos, rightmost; merge, leftmost.
//!
//! Because switches always come first, every run of switches continues until
//! the tuple is nondecreasing again, and every run costs exactly the number
//! of inversions it removes. [`CompressedLgs`] uses this to play LGS on a
//! vector of per-index counts, one non-switch move at a time.

use super::Policy;
use crate::engine::{GameState, Move, MoveKind};
use crate::error::Result;
use crate::fib;

/// Which switch LGS performs when several are available.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SwitchOrder {
    #[default]
    Leftmost,
    Rightmost,
}

/// LGS move for `s`, or `None` at a terminal state.
pub fn lgs_next(s: &GameState, order: SwitchOrder) -> Option<Move> {
    let mut switch: Option<usize> = None;
    let mut merge_ones: Option<usize> = None;
    let mut split: Option<(MoveKind, usize)> = None;
    let mut merge: Option<usize> = None;

    for (p, w) in s.indices().windows(2).enumerate() {
        let pos = p + 1;
        match MoveKind::for_pair(w[0], w[1]) {
            Some(MoveKind::Switch) => {
                if order == SwitchOrder::Leftmost {
                    return Some(Move::new(MoveKind::Switch, pos));
                }
                switch = Some(pos);
            }
            Some(MoveKind::MergeOnes) => {
                merge_ones.get_or_insert(pos);
            }
            Some(k @ (MoveKind::Split | MoveKind::SplitTwos)) => split = Some((k, pos)),
            Some(MoveKind::Merge) => {
                merge.get_or_insert(pos);
            }
            None => {}
        }
    }

    switch
        .map(|p| Move::new(MoveKind::Switch, p))
        .or_else(|| merge_ones.map(|p| Move::new(MoveKind::MergeOnes, p)))
        .or_else(|| split.map(|(k, p)| Move::new(k, p)))
        .or_else(|| merge.map(|p| Move::new(MoveKind::Merge, p)))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Lgs {
    pub order: SwitchOrder,
}

impl Lgs {
    pub fn new(order: SwitchOrder) -> Self {
        Lgs { order }
    }
}

impl Policy for Lgs {
    fn name(&self) -> &str {
        match self.order {
            SwitchOrder::Leftmost => "lgs",
            SwitchOrder::Rightmost => "lgs-rightmost",
        }
    }

    fn next_move(&mut self, s: &GameState) -> Option<Move> {
        lgs_next(s, self.order)
    }
}

/// One non-switch LGS move followed by the switches that re-sort the tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MacroStep {
    pub kind: MoveKind,
    /// Index of the left element of the rewritten pair.
    pub index: u8,
    pub switches: u64,
    /// Total moves played once this step and its switches are done.
    pub moves_after: u64,
}

/// LGS played on the sorted multiset of indices.
///
/// Between non-switch moves the LGS tuple is always nondecreasing, so it is
/// fully described by `counts[i]`, the number of copies of `F_i`.
#[derive(Debug, Clone)]
pub struct CompressedLgs {
    counts: Vec<u64>,
    moves: u64,
}

impl CompressedLgs {
    pub fn new(n: u64) -> Result<Self> {
        let top = fib::max_index_for(n)?;
        let mut counts = vec![0; top + 3];
        counts[1] = n;
        Ok(CompressedLgs { counts, moves: 0 })
    }

    pub fn moves(&self) -> u64 {
        self.moves
    }

    /// `counts()[i]` is the number of copies of `F_i`; entry 0 is unused.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// No switch and no merge-ones is legal.
    pub fn is_checkpoint(&self) -> bool {
        self.counts[1] <= 1
    }

    pub fn is_terminal(&self) -> bool {
        let c = &self.counts[1..];
        c.iter().all(|&x| x <= 1) && c.windows(2).all(|w| w[0] == 0 || w[1] == 0)
    }

    /// Sorted higher-index terms (indices >= 3).
    pub fn higher_terms(&self) -> Vec<u8> {
        self.expand(3)
    }

    /// The current (sorted) tuple.
    pub fn to_state(&self) -> GameState {
        GameState::from_indices(self.expand(1)).expect("counts describe a valid state")
    }

    fn expand(&self, from: usize) -> Vec<u8> {
        self.counts
            .iter()
            .enumerate()
            .skip(from)
            .flat_map(|(i, &c)| std::iter::repeat_n(i as u8, c as usize))
            .collect()
    }

    /// Plays the next non-switch move and the switches that follow it.
    pub fn step(&mut self) -> Option<MacroStep> {
        let c = &mut self.counts;
        let (kind, index, switches) = if c[1] >= 2 {
            // leftmost pair of ones; the new F_2 passes the remaining ones
            let sw = c[1] - 2;
            c[1] -= 2;
            c[2] += 1;
            (MoveKind::MergeOnes, 1, sw)
        } else if let Some(i) = (2..c.len()).rev().find(|&i| c[i] >= 2) {
            // rightmost equal pair: the last two copies of F_i. The low
            // result moves left past every larger term to its left; the high
            // result F_{i+1} is already in place.
            let low = if i == 2 { 1 } else { i - 2 };
            let sw = c[low + 1..i].iter().sum::<u64>() + (c[i] - 2);
            c[i] -= 2;
            c[low] += 1;
            c[i + 1] += 1;
            let kind = if i == 2 { MoveKind::SplitTwos } else { MoveKind::Split };
            (kind, i, sw)
        } else {
            let i = (1..c.len() - 2).find(|&i| c[i] >= 1 && c[i + 1] >= 1)?;
            // leftmost (F_i, F_{i+1}); F_{i+2} passes the remaining F_{i+1}s
            let sw = c[i + 1] - 1;
            c[i] -= 1;
            c[i + 1] -= 1;
            c[i + 2] += 1;
            (MoveKind::Merge, i, sw)
        };
        self.moves += 1 + switches;
        Some(MacroStep {
            kind,
            index: index as u8,
            switches,
            moves_after: self.moves,
        })
    }
}

/// Length of the LGS game from `n`.
pub fn lgs_length(n: u64) -> Result<u64> {
    let mut g = CompressedLgs::new(n)?;
    while g.step().is_some() {}
    Ok(g.moves())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::legal_moves;
    use crate::strategy::run_game;

    fn st(v: &[u8]) -> GameState {
        GameState::from_indices(v.to_vec()).unwrap()
    }

    #[test]
    fn priority_examples() {
        let o = SwitchOrder::Leftmost;
        assert_eq!(lgs_next(&st(&[2, 1, 1]), o), Some(Move::new(MoveKind::Switch, 1)));
        assert_eq!(lgs_next(&st(&[1, 1, 2]), o), Some(Move::new(MoveKind::MergeOnes, 1)));
        assert_eq!(lgs_next(&st(&[2, 2, 3, 3]), o), Some(Move::new(MoveKind::Split, 3)));
        assert_eq!(lgs_next(&st(&[1, 2, 4]), o), Some(Move::new(MoveKind::Merge, 1)));
        assert_eq!(lgs_next(&st(&[1, 3]), o), None);
        assert_eq!(
            lgs_next(&st(&[3, 1, 4, 2]), SwitchOrder::Rightmost),
            Some(Move::new(MoveKind::Switch, 3))
        );
        assert_eq!(
            lgs_next(&st(&[3, 1, 4, 2]), SwitchOrder::Leftmost),
            Some(Move::new(MoveKind::Switch, 1))
        );
    }

    #[test]
    fn small_traces() {
        let r = run_game(4, &mut Lgs::default(), true).unwrap();
        let trace: Vec<String> = r.states.unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(
            trace,
            ["(1,1,1,1)", "(2,1,1)", "(1,2,1)", "(1,1,2)", "(2,2)", "(1,3)"]
        );
        let r = run_game(3, &mut Lgs::default(), false).unwrap();
        assert_eq!(r.length(), 3);
        assert_eq!(r.final_state, st(&[3]));
        assert_eq!(run_game(1, &mut Lgs::default(), false).unwrap().length(), 0);
    }

    #[test]
    fn compressed_matches_stepwise() {
        for n in 1..=150u64 {
            let r = run_game(n, &mut Lgs::default(), false).unwrap();
            assert_eq!(lgs_length(n).unwrap(), r.length() as u64, "n={n}");
        }
    }

    #[test]
    fn compressed_terminal_matches_engine() {
        for n in 1..=80u64 {
            let mut g = CompressedLgs::new(n).unwrap();
            loop {
                let s = g.to_state();
                assert_eq!(g.is_terminal(), legal_moves(&s).is_empty(), "n={n} {s}");
                if g.step().is_none() {
                    break;
                }
            }
            assert_eq!(g.to_state().indices(), crate::fib::zeckendorf(n).unwrap());
        }
    }

    #[test]
    fn known_lengths() {
        let expected = [0u64, 1, 3, 5, 9, 13, 18, 25, 31, 39, 48];
        for (n, &len) in (1..).zip(expected.iter()) {
            assert_eq!(lgs_length(n).unwrap(), len, "n={n}");
        }
    }
}
