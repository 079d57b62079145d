//! Terminal play against the engine.

use std::io::{BufRead, Write};

use anyhow::Result;
use zeckgame_core::strategy::{lgs_next, playout_rng, random_next, PlayoutRng, SwitchOrder};
use zeckgame_core::{apply_move, legal_moves, GameState, Move, Player, Solver};

pub(crate) enum Opponent {
    Optimal { memo_limit: usize },
    Lgs,
    Random { seed: u64 },
}

enum Engine {
    Optimal(Solver),
    Lgs,
    Random(Box<PlayoutRng>),
}

impl Engine {
    fn choose(&mut self, s: &GameState) -> Result<Option<Move>> {
        Ok(match self {
            Engine::Optimal(solver) => solver.best_move(s)?,
            Engine::Lgs => lgs_next(s, SwitchOrder::Leftmost),
            Engine::Random(rng) => random_next(s, rng),
        })
    }
}

fn other(p: Player) -> Player {
    match p {
        Player::One => Player::Two,
        Player::Two => Player::One,
    }
}

/// Source of the human's move selections.
pub(crate) trait Human {
    /// Raw selection text for the listed moves, or `None` at end of input.
    fn select(&mut self, state: &GameState, moves: &[Move]) -> Result<Option<String>>;
}

struct LineHuman<R> {
    input: R,
    line: String,
}

impl<R: BufRead> Human for LineHuman<R> {
    fn select(&mut self, _: &GameState, _: &[Move]) -> Result<Option<String>> {
        self.line.clear();
        if self.input.read_line(&mut self.line)? == 0 {
            return Ok(None);
        }
        Ok(Some(self.line.trim().to_string()))
    }
}

/// Runs one game reading selections line by line from `input`.
pub(crate) fn play_session<R: BufRead, W: Write>(
    n: u64,
    opponent: Opponent,
    human_first: bool,
    input: R,
    out: W,
) -> Result<Player> {
    let mut human = LineHuman {
        input,
        line: String::new(),
    };
    play_game(n, opponent, human_first, &mut human, out)
}

/// Runs one game. The human picks moves by number; an out-of-range or
/// unparsable selection reprompts, end of input resigns. Returns the winner.
pub(crate) fn play_game<W: Write>(
    n: u64,
    opponent: Opponent,
    human_first: bool,
    source: &mut dyn Human,
    mut out: W,
) -> Result<Player> {
    let mut engine = match opponent {
        Opponent::Optimal { memo_limit } => Engine::Optimal(Solver::new(memo_limit)),
        Opponent::Lgs => Engine::Lgs,
        Opponent::Random { seed } => Engine::Random(Box::new(playout_rng(seed, 0))),
    };
    let human = if human_first { Player::One } else { Player::Two };
    let mut state = GameState::initial(n)?;
    let mut to_move = Player::One;

    loop {
        writeln!(out, "\n{state}   {}", state.render_fib())?;
        let moves = legal_moves(&state);
        if moves.is_empty() {
            // the player to move is stuck, so the previous mover made the last move
            let winner = other(to_move);
            let who = if winner == human { "you" } else { "engine" };
            writeln!(out, "No moves left. {winner} ({who}) wins by making the last move.")?;
            return Ok(winner);
        }

        let m = if to_move == human {
            writeln!(out, "{to_move} (you) to move:")?;
            for (i, m) in moves.iter().enumerate() {
                writeln!(out, "  {}) {m} -> {}", i + 1, apply_move(&state, *m)?)?;
            }
            loop {
                write!(out, "move> ")?;
                out.flush()?;
                let Some(text) = source.select(&state, &moves)? else {
                    let winner = other(human);
                    writeln!(out, "\nYou resign. {winner} (engine) wins.")?;
                    return Ok(winner);
                };
                match text.parse::<usize>() {
                    Ok(k) if (1..=moves.len()).contains(&k) => break moves[k - 1],
                    _ => writeln!(out, "Enter a number from 1 to {}.", moves.len())?,
                }
            }
        } else {
            let m = engine
                .choose(&state)?
                .expect("engine has a move at a non-terminal state");
            writeln!(out, "{to_move} (engine) plays {m}")?;
            m
        };
        state = apply_move(&state, m)?;
        to_move = other(to_move);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;
    use zeckgame_core::solver::{solve_n, SolveOptions};

    fn run(n: u64, opp: Opponent, human_first: bool, script: &str) -> (Player, String) {
        let mut out = Vec::new();
        let w = play_session(n, opp, human_first, Cursor::new(script.to_string()), &mut out).unwrap();
        (w, String::from_utf8(out).unwrap())
    }

    fn optimal() -> Opponent {
        Opponent::Optimal { memo_limit: 1 << 24 }
    }

    #[test]
    fn engine_first_n4_matches_solver() {
        let expected = solve_n(4, &SolveOptions::default()).unwrap().outcome;
        // the human always picks the first listed move
        let (winner, text) = run(4, optimal(), false, &"1\n".repeat(20));
        assert_eq!(winner, expected);
        assert!(text.contains("(1,3)"));
        assert!(text.contains("(engine) wins"));
    }

    #[test]
    fn out_of_range_reprompts() {
        let (_, text) = run(3, Opponent::Lgs, true, "9\nx\n1\n1\n1\n");
        assert_eq!(text.matches("Enter a number from 1 to 2.").count(), 2);
        // the state shown after the bad inputs is still the start
        assert!(text.contains("(2,1)"));
    }

    #[test]
    fn eof_resigns() {
        let (winner, text) = run(5, Opponent::Lgs, true, "");
        assert_eq!(winner, Player::Two);
        assert!(text.contains("You resign"));
    }

    #[test]
    fn n1_has_no_moves() {
        let (winner, _) = run(1, Opponent::Random { seed: 1 }, true, "");
        assert_eq!(winner, Player::Two);
    }

    type Picker = Box<dyn FnMut(&[Move]) -> usize>;

    struct Scripted<F>(F);

    impl<F: FnMut(&[Move]) -> usize> Human for Scripted<F> {
        fn select(&mut self, _: &GameState, moves: &[Move]) -> Result<Option<String>> {
            Ok(Some((self.0)(moves).to_string()))
        }
    }

    #[test]
    fn n18_engine_second_beats_scripted_lines() {
        let mut lines: Vec<Picker> = vec![
            Box::new(|_| 1),
            Box::new(|m| m.len()),
            Box::new(|m| m.len().div_ceil(2)),
        ];
        for seed in 0..5u64 {
            let mut rng = playout_rng(seed, 99);
            lines.push(Box::new(move |m| {
                use rand::Rng;
                rng.random_range(1..=m.len())
            }));
        }
        for pick in lines {
            let mut human = Scripted(pick);
            let w = play_game(18, optimal(), true, &mut human, std::io::sink()).unwrap();
            assert_eq!(w, Player::Two);
        }
    }
}
