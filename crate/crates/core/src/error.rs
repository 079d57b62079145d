use thiserror::Error;

use crate::engine::{Move, TransitionError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("value {0} exceeds the supported maximum of 2^62")]
    ValueTooLarge(u64),

    #[error("Fibonacci index {0} is outside the supported range 1..={max}", max = crate::fib::MAX_INDEX)]
    IndexOutOfRange(usize),

    #[error("start value must be at least {min}, got {n}")]
    StartTooSmall { n: u64, min: u64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error(transparent)]
    Transition(#[from] TransitionError),

    #[error("policy `{policy}` returned {mv}, which is not legal in {state}")]
    PolicyViolation {
        policy: String,
        mv: Move,
        state: String,
    },

    #[error("transition {from} --{mv}--> {to} failed validation")]
    InvalidTransition { from: String, mv: Move, to: String },

    #[error("memo table limit of {limit} entries exceeded")]
    Capacity { limit: usize },
}
