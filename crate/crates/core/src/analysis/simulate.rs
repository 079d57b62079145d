use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::LogNormalFit;
use crate::error::{Error, Result};
use crate::strategy::{playout_length, playout_rng};

/// Game lengths of many uniform random games from the same `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    pub n: u64,
    pub trials: u64,
    pub seed: u64,
    /// length -> number of games of that length
    pub lengths: BTreeMap<u64, u64>,
    /// Games with an odd number of moves: Player 1 made the last move.
    pub p1_wins: u64,
}

/// Metadata sidecar written next to the histogram CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationSummary {
    pub n: u64,
    pub trials: u64,
    pub seed: u64,
    pub p1_wins: u64,
    pub mu: f64,
    pub sigma: f64,
    pub ks: f64,
}

/// Plays `trials` uniform random games from `n`. Trial `t` draws from
/// stream `t` of `master_seed`, so the result does not depend on how the
/// rayon pool schedules the trials.
pub fn simulate_random(n: u64, trials: u64, master_seed: u64) -> Result<Histogram> {
    if n < 2 {
        return Err(Error::StartTooSmall { n, min: 2 });
    }
    if trials == 0 {
        return Err(Error::InvalidState("at least one trial is required".into()));
    }
    let lengths: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|t| playout_length(n, &mut playout_rng(master_seed, t)))
        .collect::<Result<_>>()?;
    Ok(Histogram::from_lengths(n, master_seed, &lengths))
}

impl Histogram {
    pub fn from_lengths(n: u64, seed: u64, lengths: &[u64]) -> Self {
        let mut bins = BTreeMap::new();
        for &len in lengths {
            *bins.entry(len).or_insert(0) += 1;
        }
        Histogram {
            n,
            trials: lengths.len() as u64,
            seed,
            p1_wins: lengths.iter().filter(|&&l| l % 2 == 1).count() as u64,
            lengths: bins,
        }
    }

    pub fn p1_fraction(&self) -> f64 {
        self.p1_wins as f64 / self.trials as f64
    }

    pub fn min_length(&self) -> Option<u64> {
        self.lengths.keys().next().copied()
    }

    pub fn max_length(&self) -> Option<u64> {
        self.lengths.keys().next_back().copied()
    }

    pub fn mean(&self) -> f64 {
        let sum: f64 = self.lengths.iter().map(|(&l, &c)| l as f64 * c as f64).sum();
        sum / self.trials as f64
    }

    /// Lower median.
    pub fn median(&self) -> u64 {
        let half = self.trials.div_ceil(2);
        let mut seen = 0;
        for (&l, &c) in &self.lengths {
            seen += c;
            if seen >= half {
                return l;
            }
        }
        0
    }

    /// Population skewness of the lengths.
    pub fn skewness(&self) -> f64 {
        let mean = self.mean();
        let nf = self.trials as f64;
        let moment = |p: i32| -> f64 {
            self.lengths
                .iter()
                .map(|(&l, &c)| (l as f64 - mean).powi(p) * c as f64)
                .sum::<f64>()
                / nf
        };
        let m2 = moment(2);
        if m2 == 0.0 {
            return 0.0;
        }
        moment(3) / m2.powf(1.5)
    }

    /// Counts in `bins` equal-width bins spanning `[min, max]`.
    pub fn binned(&self, bins: usize) -> Vec<u64> {
        let (Some(lo), Some(hi)) = (self.min_length(), self.max_length()) else {
            return Vec::new();
        };
        let bins = bins.max(1);
        let width = (hi - lo + 1) as f64 / bins as f64;
        let mut out = vec![0; bins];
        for (&l, &c) in &self.lengths {
            let b = (((l - lo) as f64) / width) as usize;
            out[b.min(bins - 1)] += c;
        }
        out
    }

    /// Sturges' rule: `ceil(log2 N) + 1` bins.
    pub fn sturges_bins(&self) -> usize {
        (self.trials as f64).log2().ceil() as usize + 1
    }

    /// Unimodality of the Sturges-binned histogram.
    pub fn is_unimodal(&self) -> bool {
        is_unimodal(&self.binned(self.sturges_bins()))
    }

    /// CSV with header `length,count`, ascending by length.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (l, c) in &self.lengths {
            out.push_str(&format!("{l},{c}\n"));
        }
        out
    }

    pub fn summary(&self, fit: &LogNormalFit) -> SimulationSummary {
        SimulationSummary {
            n: self.n,
            trials: self.trials,
            seed: self.seed,
            p1_wins: self.p1_wins,
            mu: fit.mu,
            sigma: fit.sigma,
            ks: fit.ks_distance,
        }
    }
}

/// Nondecreasing up to a peak, nonincreasing after it.
pub(crate) fn is_unimodal(counts: &[u64]) -> bool {
    let mut falling = false;
    for w in counts.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::z_count;

    #[test]
    fn n2_all_length_one() {
        let h = simulate_random(2, 5, 0).unwrap();
        assert_eq!(h.lengths, BTreeMap::from([(1, 5)]));
        assert_eq!(h.p1_wins, 5);
    }

    #[test]
    fn n3_two_lengths() {
        let h = simulate_random(3, 500, 11).unwrap();
        assert!(h.lengths.keys().all(|&l| l == 2 || l == 3));
        assert_eq!(h.lengths.values().sum::<u64>(), 500);
    }

    #[test]
    fn lengths_within_bounds() {
        for n in [5u64, 17, 40] {
            let h = simulate_random(n, 200, n).unwrap();
            let lo = n - z_count(n).unwrap() as u64;
            assert!(h.min_length().unwrap() >= lo);
            assert!(h.max_length().unwrap() <= n * (n - 1) / 2);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(simulate_random(1, 5, 0).is_err());
        assert!(simulate_random(5, 0, 0).is_err());
    }

    #[test]
    fn unimodal_helper() {
        assert!(is_unimodal(&[1, 3, 3, 7, 2, 2, 1]));
        assert!(is_unimodal(&[5, 4, 1]));
        assert!(!is_unimodal(&[1, 4, 2, 3]));
    }

    #[test]
    fn csv_and_stats() {
        let h = Histogram::from_lengths(9, 1, &[4, 4, 5, 9]);
        assert_eq!(h.to_csv(), "length,count\n4,2\n5,1\n9,1\n");
        assert_eq!(h.median(), 4);
        assert_eq!(h.p1_wins, 2);
        assert!(h.skewness() > 0.0);
        assert_eq!(h.binned(2), vec![3, 1]);
    }
}
