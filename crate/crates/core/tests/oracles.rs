//! Library results checked against small independent reimplementations.

use std::collections::HashMap;

use zeckgame_core::analysis::{lemma_checker, simulate_random};
use zeckgame_core::strategy::{run_game, shortest_game, CompressedLgs, Lgs, SwitchOrder};
use zeckgame_core::{fib_value, lgs_length, zeckendorf, GameState, Solver};

fn fibs(limit: u64) -> Vec<u64> {
    let mut f = vec![1u64, 2];
    while *f.last().unwrap() <= limit {
        let k = f.len();
        f.push(f[k - 1] + f[k - 2]);
    }
    f
}

/// Every index set with no two consecutive indices, grouped by value.
fn all_gap_sets(limit: u64) -> HashMap<u64, Vec<Vec<u8>>> {
    let f = fibs(limit);
    let mut out: HashMap<u64, Vec<Vec<u8>>> = HashMap::new();
    fn walk(f: &[u64], from: usize, sum: u64, set: &mut Vec<u8>, limit: u64, out: &mut HashMap<u64, Vec<Vec<u8>>>) {
        if sum > 0 {
            out.entry(sum).or_default().push(set.clone());
        }
        for i in from..f.len() {
            if sum + f[i] > limit {
                break;
            }
            set.push(i as u8 + 1);
            walk(f, i + 2, sum + f[i], set, limit, out);
            set.pop();
        }
    }
    walk(&f, 0, 0, &mut Vec::new(), limit, &mut out);
    out
}

#[test]
fn zeckendorf_is_the_unique_gap_set() {
    let sets = all_gap_sets(200);
    for n in 1..=200u64 {
        let found = &sets[&n];
        assert_eq!(found.len(), 1, "n={n} has {} representations", found.len());
        assert_eq!(zeckendorf(n).unwrap(), found[0], "n={n}");
    }
}

#[test]
fn fib_values_follow_the_recurrence() {
    assert_eq!(fib_value(1).unwrap(), 1);
    assert_eq!(fib_value(2).unwrap(), 2);
    for i in 3..=80 {
        assert_eq!(fib_value(i).unwrap(), fib_value(i - 1).unwrap() + fib_value(i - 2).unwrap());
    }
}

#[test]
fn shortest_game_length_is_n_minus_z() {
    for n in 1..=2000u64 {
        let r = shortest_game(n).unwrap();
        assert_eq!(r.length() as u64, n - zeckendorf(n).unwrap().len() as u64, "n={n}");
        assert_eq!(r.final_state.indices(), zeckendorf(n).unwrap(), "n={n}");
    }
}

#[test]
fn lgs_length_within_bounds() {
    for n in 2..=2000u64 {
        let len = lgs_length(n).unwrap();
        let z = zeckendorf(n).unwrap().len() as u64;
        assert!(len >= n - z && len <= n * (n - 1) / 2, "n={n}: {len}");
    }
}

#[test]
fn switch_order_does_not_change_lgs_length() {
    for n in 1..=120u64 {
        let left = run_game(n, &mut Lgs::new(SwitchOrder::Leftmost), false).unwrap();
        let right = run_game(n, &mut Lgs::new(SwitchOrder::Rightmost), false).unwrap();
        assert_eq!(left.length(), right.length(), "n={n}");
        assert_eq!(left.final_state, right.final_state, "n={n}");
    }
}

#[test]
fn compressed_checkpoints_match_stepwise_play() {
    for n in 2..=60u64 {
        let r = run_game(n, &mut Lgs::default(), true).unwrap();
        let states = r.states.clone().unwrap();
        let mut g = CompressedLgs::new(n).unwrap();
        while let Some(step) = g.step() {
            assert_eq!(states[step.moves_after as usize], g.to_state(), "n={n}");
        }
        assert_eq!(g.moves() as usize, r.length());
    }
}

/// Memo-free negamax.
fn mover_wins_naive(s: &GameState) -> bool {
    zeckgame_core::legal_moves(s)
        .into_iter()
        .any(|m| !mover_wins_naive(&zeckgame_core::apply_move(s, m).unwrap()))
}

fn longest_naive(s: &GameState) -> u32 {
    zeckgame_core::legal_moves(s)
        .into_iter()
        .map(|m| 1 + longest_naive(&zeckgame_core::apply_move(s, m).unwrap()))
        .max()
        .unwrap_or(0)
}

#[test]
fn solver_matches_naive_search() {
    let solver = Solver::new(1 << 20);
    for n in 1..=7u64 {
        let s = GameState::initial(n).unwrap();
        assert_eq!(solver.mover_wins(&s).unwrap(), mover_wins_naive(&s), "n={n}");
        assert_eq!(solver.max_remaining(&s).unwrap(), longest_naive(&s), "n={n}");
    }
    for v in [[3u8, 1, 2, 1, 1, 4], [1, 1, 1, 2, 3, 1], [5, 2, 2, 1, 3, 1]] {
        let s = GameState::from_indices(v.to_vec()).unwrap();
        assert_eq!(solver.mover_wins(&s).unwrap(), mover_wins_naive(&s), "{s}");
        assert_eq!(solver.max_remaining(&s).unwrap(), longest_naive(&s), "{s}");
    }
}

#[test]
fn longest_game_within_upper_bound() {
    let solver = Solver::new(1 << 22);
    for n in 2..=12u64 {
        let m = solver.max_remaining(&GameState::initial(n).unwrap()).unwrap() as u64;
        assert!(m <= n * (n - 1) / 2, "n={n}: {m}");
        if n <= 3 {
            assert_eq!(m, n * (n - 1) / 2);
        }
    }
}

#[test]
fn lemma_checker_clean_to_200() {
    for n in 2..=200 {
        let r = lemma_checker(n).unwrap();
        assert!(r.is_clean(), "n={n}: {:?}", r.violations.first());
    }
}

#[test]
fn simulation_independent_of_pool_size() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| simulate_random(80, 500, 3).unwrap())
    };
    assert_eq!(run(1), run(6));
}
