//! Ordered Zeckendorf game toolkit.
//!
//! The game starts from an ordered tuple of `n` copies of `F_1` and players
//! rewrite adjacent pairs (merge, merge ones, split, split twos, switch)
//! until the ascending Zeckendorf decomposition of `n` is reached. Fibonacci
//! numbers use the indexing `F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...`.
//!
//! The crate provides:
//!
//! - [`fib`]: the Fibonacci table and greedy Zeckendorf decomposition,
//! - [`engine`]: states, legal moves, move application and the monovariant,
//! - [`strategy`]: the Long Game Strategy, the shortest-game constructor,
//!   uniform random play and a validating game runner,
//! - [`solver`]: exact win/loss and longest-game search over the move DAG,
//! - [`analysis`]: Monte Carlo histograms, log-normal fitting, length bounds,
//!   the higher-index repetition checker and the invariant verification suite.
//!
//! The solver uses normal play: the player who makes the last move wins.

pub mod analysis;
pub mod engine;
mod error;
pub mod fib;
pub mod record;
pub mod solver;
pub mod strategy;

pub use engine::{
    apply_move, is_terminal, legal_moves, monovariant, validate_transition, GameState, Move,
    MoveKind, TransitionError,
};
pub use error::{Error, Result};
pub use fib::{fib_value, max_index_for, z_count, zeckendorf};
pub use solver::{Player, SolveOptions, SolveResult, Solver};
pub use strategy::{
    lgs_length, lgs_next, random_next, run_game, shortest_game, GameRecord, Lgs, Policy,
    RandomPolicy, SwitchOrder,
};
