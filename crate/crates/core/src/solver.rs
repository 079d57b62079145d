//! Exact solving of the ordered Zeckendorf game.
//!
//! The move graph is acyclic (the monovariant drops on every move), so
//! "the player to move wins" and "longest remaining playout" are functions of
//! the state alone and can be memoized without a turn bit. Play is normal:
//! a player with no legal move has lost.
//!
//! Both searches are iterative depth-first traversals with an explicit stack,
//! since paths can be about `n^2 / 2` moves long.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{apply_move, legal_moves, GameState, Move};
use crate::error::{Error, Result};

pub const DEFAULT_MEMO_LIMIT: usize = 1 << 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    #[serde(rename = "P1")]
    One,
    #[serde(rename = "P2")]
    Two,
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Player::One => "P1",
            Player::Two => "P2",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MemoEntry {
    pub mover_wins: Option<bool>,
    pub max_remaining: Option<u32>,
}

/// State-keyed memo shared by both searches. Entries are written once per
/// field; concurrent writers always agree on the value.
#[derive(Debug)]
pub struct MemoTable {
    map: DashMap<Box<[u8]>, MemoEntry>,
    entries: AtomicUsize,
    limit: usize,
}

impl MemoTable {
    pub fn new(limit: usize) -> Self {
        MemoTable {
            map: DashMap::new(),
            entries: AtomicUsize::new(0),
            limit,
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn len(&self) -> usize {
        self.entries.load(Ordering::Relaxed)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &[u8]) -> Option<MemoEntry> {
        self.map.get(key).map(|e| *e)
    }

    fn update(&self, key: &[u8], f: impl FnOnce(&mut MemoEntry)) -> Result<()> {
        if let Some(mut e) = self.map.get_mut(key) {
            f(&mut e);
            return Ok(());
        }
        if self.entries.load(Ordering::Relaxed) >= self.limit {
            return Err(Error::Capacity { limit: self.limit });
        }
        let mut inserted = false;
        let mut e = self.map.entry(key.into()).or_insert_with(|| {
            inserted = true;
            MemoEntry::default()
        });
        f(&mut e);
        if inserted {
            self.entries.fetch_add(1, Ordering::Relaxed);
        }
        Ok(())
    }
}

impl Default for MemoTable {
    fn default() -> Self {
        MemoTable::new(DEFAULT_MEMO_LIMIT)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub memo_limit: usize,
    /// Compute a principal variation (needs the longest-game search for the
    /// losing side).
    pub principal_variation: bool,
    /// Evaluate the root's children on the rayon pool.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            memo_limit: DEFAULT_MEMO_LIMIT,
            principal_variation: false,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub n: u64,
    #[serde(rename = "winner")]
    pub outcome: Player,
    #[serde(rename = "states")]
    pub states_explored: u64,
    pub memo_entries: usize,
    /// `n = 1` has no moves at all; the winner is reported as P2 by the
    /// normal-play convention.
    pub degenerate: bool,
    #[serde(rename = "pv")]
    pub principal_variation: Option<Vec<Move>>,
}

impl SolveResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solve results always serialize")
    }
}

struct Frame {
    state: GameState,
    children: Vec<GameState>,
    next: usize,
    best: u32,
}

impl Frame {
    fn new(state: GameState) -> Self {
        let children = legal_moves(&state)
            .into_iter()
            .map(|m| apply_move(&state, m).expect("legal move applies"))
            .collect();
        Frame {
            state,
            children,
            next: 0,
            best: 0,
        }
    }
}

#[derive(Debug, Default)]
pub struct Solver {
    memo: MemoTable,
    explored: AtomicU64,
}

impl Solver {
    pub fn new(memo_limit: usize) -> Self {
        Solver {
            memo: MemoTable::new(memo_limit),
            explored: AtomicU64::new(0),
        }
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    /// Number of states expanded so far by either search.
    pub fn states_explored(&self) -> u64 {
        self.explored.load(Ordering::Relaxed)
    }

    /// Whether the player to move from `s` can force a win.
    pub fn mover_wins(&self, s: &GameState) -> Result<bool> {
        if let Some(w) = self.memo.get(s.key()).and_then(|e| e.mover_wins) {
            return Ok(w);
        }
        let mut stack = vec![self.expand(s.clone())];
        while let Some(top) = stack.last_mut() {
            let mut wins = false;
            let mut descend = None;
            while let Some(child) = top.children.get(top.next) {
                match self.memo.get(child.key()).and_then(|e| e.mover_wins) {
                    Some(false) => {
                        wins = true;
                        break;
                    }
                    Some(true) => top.next += 1,
                    None => {
                        descend = Some(child.clone());
                        break;
                    }
                }
            }
            if let Some(child) = descend {
                let frame = self.expand(child);
                stack.push(frame);
                continue;
            }
            let done = stack.pop().expect("non-empty stack");
            self.memo.update(done.state.key(), |e| e.mover_wins = Some(wins))?;
        }
        Ok(self
            .memo
            .get(s.key())
            .and_then(|e| e.mover_wins)
            .expect("root was solved"))
    }

    /// Length of the longest playout from `s`.
    pub fn max_remaining(&self, s: &GameState) -> Result<u32> {
        if let Some(m) = self.memo.get(s.key()).and_then(|e| e.max_remaining) {
            return Ok(m);
        }
        let mut stack = vec![self.expand(s.clone())];
        while let Some(top) = stack.last_mut() {
            let mut descend = None;
            while let Some(child) = top.children.get(top.next) {
                match self.memo.get(child.key()).and_then(|e| e.max_remaining) {
                    Some(m) => {
                        top.best = top.best.max(m + 1);
                        top.next += 1;
                    }
                    None => {
                        descend = Some(child.clone());
                        break;
                    }
                }
            }
            if let Some(child) = descend {
                let frame = self.expand(child);
                stack.push(frame);
                continue;
            }
            let done = stack.pop().expect("non-empty stack");
            self.memo
                .update(done.state.key(), |e| e.max_remaining = Some(done.best))?;
        }
        Ok(self
            .memo
            .get(s.key())
            .and_then(|e| e.max_remaining)
            .expect("root was solved"))
    }

    /// A winning move if one exists, otherwise the move that keeps the game
    /// going longest. `None` at terminal states.
    pub fn best_move(&self, s: &GameState) -> Result<Option<Move>> {
        let moves = legal_moves(s);
        let mut fallback: Option<(u32, Move)> = None;
        for m in moves {
            let child = apply_move(s, m)?;
            if !self.mover_wins(&child)? {
                return Ok(Some(m));
            }
            let len = self.max_remaining(&child)?;
            if fallback.is_none_or(|(best, _)| len > best) {
                fallback = Some((len, m));
            }
        }
        Ok(fallback.map(|(_, m)| m))
    }

    /// Winning moves from `s`, in ascending position.
    pub fn winning_moves(&self, s: &GameState) -> Result<Vec<Move>> {
        let mut out = Vec::new();
        for m in legal_moves(s) {
            if !self.mover_wins(&apply_move(s, m)?)? {
                out.push(m);
            }
        }
        Ok(out)
    }

    fn expand(&self, s: GameState) -> Frame {
        self.explored.fetch_add(1, Ordering::Relaxed);
        Frame::new(s)
    }

    /// Best-move line from `s` to the end of the game.
    pub fn principal_variation(&self, s: &GameState) -> Result<Vec<Move>> {
        let mut state = s.clone();
        let mut line = Vec::new();
        while let Some(m) = self.best_move(&state)? {
            state = apply_move(&state, m)?;
            line.push(m);
        }
        Ok(line)
    }
}

/// Solves the game started from `n` ones.
pub fn solve_n(n: u64, opts: &SolveOptions) -> Result<SolveResult> {
    let solver = Solver::new(opts.memo_limit);
    solve_with(&solver, n, opts)
}

/// As [`solve_n`], reusing (and filling) an existing solver's memo.
pub fn solve_with(solver: &Solver, n: u64, opts: &SolveOptions) -> Result<SolveResult> {
    let root = GameState::initial(n)?;
    let p1_wins = if opts.parallel {
        let children: Vec<GameState> = legal_moves(&root)
            .into_iter()
            .map(|m| apply_move(&root, m))
            .collect::<Result<_, _>>()?;
        let child_wins: Vec<bool> = children
            .par_iter()
            .map(|c| solver.mover_wins(c))
            .collect::<Result<_>>()?;
        let wins = child_wins.iter().any(|&w| !w);
        solver.memo.update(root.key(), |e| e.mover_wins = Some(wins))?;
        wins
    } else {
        solver.mover_wins(&root)?
    };
    let principal_variation = if opts.principal_variation {
        Some(solver.principal_variation(&root)?)
    } else {
        None
    };
    Ok(SolveResult {
        n,
        outcome: if p1_wins { Player::One } else { Player::Two },
        states_explored: solver.states_explored(),
        memo_entries: solver.memo.len(),
        degenerate: n == 1,
        principal_variation,
    })
}
