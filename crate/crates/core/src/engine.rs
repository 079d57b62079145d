//! Game states, the five adjacent-pair moves and the monovariant
//! `f(S) = sum_j (k + 1 - j) * F_{i_j}`.
//!
//! Positions are 1-based everywhere in the public API and name the left
//! element of the affected pair. At most one move kind is legal for any
//! pair, so `(kind, pos)` identifies a move uniquely.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::fib::{self, fib, MAX_INDEX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// `(F_i, F_{i+1}) -> F_{i+2}`
    #[serde(rename = "M")]
    Merge,
    /// `(F_1, F_1) -> F_2`
    #[serde(rename = "O")]
    MergeOnes,
    /// `(F_i, F_i) -> (F_{i-2}, F_{i+1})` for `i > 2`
    #[serde(rename = "P")]
    Split,
    /// `(F_2, F_2) -> (F_1, F_3)`
    #[serde(rename = "T")]
    SplitTwos,
    /// `(F_a, F_b) -> (F_b, F_a)` for `a > b`
    #[serde(rename = "W")]
    Switch,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] = [
        MoveKind::Merge,
        MoveKind::MergeOnes,
        MoveKind::Split,
        MoveKind::SplitTwos,
        MoveKind::Switch,
    ];

    /// One-letter code used in record lines.
    pub fn code(self) -> char {
        match self {
            MoveKind::Merge => 'M',
            MoveKind::MergeOnes => 'O',
            MoveKind::Split => 'P',
            MoveKind::SplitTwos => 'T',
            MoveKind::Switch => 'W',
        }
    }

    pub fn from_code(c: char) -> Option<Self> {
        MoveKind::ALL.into_iter().find(|k| k.code() == c)
    }

    /// The move kind legal on the pair `(a, b)`, if any.
    #[inline]
    pub fn for_pair(a: u8, b: u8) -> Option<Self> {
        if a == b {
            Some(match a {
                1 => MoveKind::MergeOnes,
                2 => MoveKind::SplitTwos,
                _ => MoveKind::Split,
            })
        } else if b == a + 1 {
            Some(MoveKind::Merge)
        } else if a > b {
            Some(MoveKind::Switch)
        } else {
            None
        }
    }

    /// Merges shrink the tuple by one; splits and switches keep its length.
    pub fn is_merge(self) -> bool {
        matches!(self, MoveKind::Merge | MoveKind::MergeOnes)
    }

    pub fn is_split(self) -> bool {
        matches!(self, MoveKind::Split | MoveKind::SplitTwos)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MoveKind::Merge => "Merge",
            MoveKind::MergeOnes => "MergeOnes",
            MoveKind::Split => "Split",
            MoveKind::SplitTwos => "SplitTwos",
            MoveKind::Switch => "Switch",
        };
        f.write_str(name)
    }
}

/// A move: its kind and the 1-based position of the left element of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(MoveKind, usize)", into = "(MoveKind, usize)")]
pub struct Move {
    pub kind: MoveKind,
    pub pos: usize,
}

impl Move {
    pub fn new(kind: MoveKind, pos: usize) -> Self {
        Move { kind, pos }
    }
}

impl From<(MoveKind, usize)> for Move {
    fn from((kind, pos): (MoveKind, usize)) -> Self {
        Move { kind, pos }
    }
}

impl From<Move> for (MoveKind, usize) {
    fn from(m: Move) -> Self {
        (m.kind, m.pos)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.pos)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("position {pos} is out of range for a tuple of length {len}")]
    IllegalPosition { pos: usize, len: usize },
    #[error("{kind} does not apply to the pair ({left},{right}) at position {pos}")]
    PatternMismatch {
        kind: MoveKind,
        pos: usize,
        left: u8,
        right: u8,
    },
}

/// An ordered tuple of Fibonacci indices together with its (constant) value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    indices: Vec<u8>,
    value: u64,
}

impl GameState {
    /// The starting position: `n` copies of `F_1`.
    pub fn initial(n: u64) -> Result<Self> {
        fib::check_value(n)?;
        let len = usize::try_from(n).map_err(|_| Error::ValueTooLarge(n))?;
        Ok(GameState {
            indices: vec![1; len],
            value: n,
        })
    }

    pub fn from_indices(indices: Vec<u8>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidState("empty tuple".into()));
        }
        let mut value: u64 = 0;
        for &i in &indices {
            if i == 0 || i as usize > MAX_INDEX {
                return Err(Error::IndexOutOfRange(i as usize));
            }
            value = value
                .checked_add(fib(i))
                .filter(|&v| v <= fib::MAX_VALUE)
                .ok_or(Error::ValueTooLarge(u64::MAX))?;
        }
        Ok(GameState { indices, value })
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    /// The invariant sum `n`.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Number of summands `k`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Canonical memo key: one byte per index, in board order.
    pub fn key(&self) -> &[u8] {
        &self.indices
    }

    /// `F1 F1 F2` rendering.
    pub fn render_fib(&self) -> String {
        let parts: Vec<String> = self.indices.iter().map(|i| format!("F{i}")).collect();
        parts.join(" ")
    }

    /// Applies `m` in place. Used by the hot playout loops; [`apply_move`]
    /// is the value-returning form.
    pub fn apply_mut(&mut self, m: Move) -> Result<(), TransitionError> {
        let len = self.indices.len();
        if m.pos == 0 || m.pos >= len {
            return Err(TransitionError::IllegalPosition { pos: m.pos, len });
        }
        let p = m.pos - 1;
        let (a, b) = (self.indices[p], self.indices[p + 1]);
        if MoveKind::for_pair(a, b) != Some(m.kind) {
            return Err(TransitionError::PatternMismatch {
                kind: m.kind,
                pos: m.pos,
                left: a,
                right: b,
            });
        }
        match m.kind {
            MoveKind::MergeOnes => {
                self.indices[p] = 2;
                self.indices.remove(p + 1);
            }
            MoveKind::Merge => {
                self.indices[p] = a + 2;
                self.indices.remove(p + 1);
            }
            MoveKind::Split => {
                self.indices[p] = a - 2;
                self.indices[p + 1] = a + 1;
            }
            MoveKind::SplitTwos => {
                self.indices[p] = 1;
                self.indices[p + 1] = 3;
            }
            MoveKind::Switch => self.indices.swap(p, p + 1),
        }
        Ok(())
    }

    /// Writes the legal moves into `out` (cleared first) in ascending position.
    pub fn legal_moves_into(&self, out: &mut Vec<Move>) {
        out.clear();
        out.extend(
            self.indices
                .windows(2)
                .enumerate()
                .filter_map(|(p, w)| MoveKind::for_pair(w[0], w[1]).map(|k| Move::new(k, p + 1))),
        );
    }
}

impl fmt::Display for GameState {
    /// Compact `(1,1,2)` rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, i) in self.indices.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(")")
    }
}

pub fn legal_moves(s: &GameState) -> Vec<Move> {
    let mut out = Vec::new();
    s.legal_moves_into(&mut out);
    out
}

pub fn apply_move(s: &GameState, m: Move) -> Result<GameState, TransitionError> {
    let mut next = s.clone();
    next.apply_mut(m)?;
    Ok(next)
}

/// True iff no move is legal, which happens exactly when the tuple is
/// strictly increasing with gaps of at least two.
pub fn is_terminal(s: &GameState) -> bool {
    s.indices.windows(2).all(|w| w[1] >= w[0] + 2)
}

pub fn monovariant(s: &GameState) -> u128 {
    let k = s.indices.len() as u128;
    s.indices
        .iter()
        .enumerate()
        .map(|(j, &i)| (k - j as u128) * fib(i) as u128)
        .sum()
}

/// Exact drop of the monovariant caused by `m` on `s`.
///
/// A merge at position `j` also lowers the weight of every term to its left
/// by one, so its decrement is `F_left + sum(left prefix)`.
pub(crate) fn expected_decrement(s: &GameState, m: Move) -> Option<u128> {
    let p = m.pos.checked_sub(1)?;
    let a = *s.indices.get(p)?;
    let b = *s.indices.get(p + 1)?;
    let prefix = || -> u128 { s.indices[..p].iter().map(|&i| fib(i) as u128).sum() };
    Some(match m.kind {
        MoveKind::Merge | MoveKind::MergeOnes => fib(a) as u128 + prefix(),
        MoveKind::Split => fib(a - 1) as u128,
        MoveKind::SplitTwos => 1,
        MoveKind::Switch => (fib(a) - fib(b)) as u128,
    })
}

/// Checks value conservation, strict monovariant decrease and the exact
/// per-kind decrement for `s --m--> s2`.
pub fn validate_transition(s: &GameState, m: Move, s2: &GameState) -> bool {
    if s.value != s2.value {
        return false;
    }
    let before = monovariant(s);
    let after = monovariant(s2);
    if after >= before {
        return false;
    }
    let expected_len = if m.kind.is_merge() {
        s.len().checked_sub(1)
    } else {
        Some(s.len())
    };
    if expected_len != Some(s2.len()) {
        return false;
    }
    expected_decrement(s, m) == Some(before - after)
}
