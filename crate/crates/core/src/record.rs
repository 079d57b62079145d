//! Line-oriented JSON forms of game records and solver results.

use serde::{Deserialize, Serialize};

use crate::engine::Move;
use crate::error::Result;
use crate::strategy::{replay, GameRecord};

/// `{"n":…, "policy":…, "seed":…, "length":…, "moves":[["M",3],…]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordLine {
    pub n: u64,
    pub policy: String,
    pub seed: Option<u64>,
    pub length: usize,
    pub moves: Vec<Move>,
}

impl From<&GameRecord> for RecordLine {
    fn from(r: &GameRecord) -> Self {
        RecordLine {
            n: r.n,
            policy: r.policy.clone(),
            seed: r.seed,
            length: r.length(),
            moves: r.moves.clone(),
        }
    }
}

impl RecordLine {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record lines always serialize")
    }

    pub fn from_json(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    /// Rebuilds and revalidates the full record.
    pub fn replay(&self) -> Result<GameRecord> {
        let r = replay(self.n, &self.policy, self.seed, &self.moves)?;
        if r.length() != self.length {
            return Err(crate::Error::InvalidState(format!(
                "record claims {} moves but lists {}",
                self.length,
                r.length()
            )));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{run_game, Lgs};

    #[test]
    fn line_shape() {
        let r = run_game(3, &mut Lgs::default(), false).unwrap();
        let line = RecordLine::from(&r).to_json();
        assert_eq!(
            line,
            r#"{"n":3,"policy":"lgs","seed":null,"length":3,"moves":[["O",1],["W",1],["M",1]]}"#
        );
        let back = RecordLine::from_json(&line).unwrap();
        assert_eq!(back.replay().unwrap(), r);
    }

    #[test]
    fn tampered_length_rejected() {
        let r = run_game(5, &mut Lgs::default(), false).unwrap();
        let mut line = RecordLine::from(&r);
        line.length += 1;
        assert!(line.replay().is_err());
    }
}
