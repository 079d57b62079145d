use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

use super::Histogram;

/// Normal fit of `ln(length)`.
///
/// `mu` and `sigma` are the population (divide-by-N) mean and standard
/// deviation of the log-lengths. `ks_distance` is the sup distance between
/// the empirical CDF of the log-lengths and the fitted normal CDF; no
/// p-value is attached because the parameters come from the same sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogNormalFit {
    pub mu: f64,
    pub sigma: f64,
    pub ks_distance: f64,
}

pub fn fit_lognormal(h: &Histogram) -> Result<LogNormalFit> {
    fit_samples(h.lengths.iter().map(|(&len, &count)| (len, count)))
}

/// Fit from `(length, count)` pairs in ascending length order.
pub fn fit_samples(bins: impl IntoIterator<Item = (u64, u64)>) -> Result<LogNormalFit> {
    let bins: Vec<(f64, u64)> = bins
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .map(|(len, c)| {
            if len == 0 {
                Err(Error::InvalidState("log-normal fit needs lengths >= 1".into()))
            } else {
                Ok(((len as f64).ln(), c))
            }
        })
        .collect::<Result<_>>()?;
    fit_logs(&bins)
}

/// Fit from `(ln(length), count)` pairs in ascending order.
pub fn fit_logs(bins: &[(f64, u64)]) -> Result<LogNormalFit> {
    let total: u64 = bins.iter().map(|&(_, c)| c).sum();
    if total == 0 {
        return Err(Error::InvalidState("log-normal fit of an empty sample".into()));
    }
    let nf = total as f64;
    let mu = bins.iter().map(|&(x, c)| x * c as f64).sum::<f64>() / nf;
    let var = bins.iter().map(|&(x, c)| (x - mu).powi(2) * c as f64).sum::<f64>() / nf;
    let sigma = var.sqrt();

    // Compare both one-sided limits at each jump of the empirical CDF. With
    // sigma = 0 the model is a point mass at mu.
    let model = |x: f64| -> (f64, f64) {
        if sigma > 0.0 {
            let f = Normal::new(mu, sigma).expect("sigma > 0").cdf(x);
            (f, f)
        } else if x < mu {
            (0.0, 0.0)
        } else if x > mu {
            (1.0, 1.0)
        } else {
            (0.0, 1.0)
        }
    };
    let mut below = 0u64;
    let mut ks: f64 = 0.0;
    for &(x, c) in bins {
        let (f_left, f_at) = model(x);
        let e_left = below as f64 / nf;
        below += c;
        let e_at = below as f64 / nf;
        ks = ks.max((f_left - e_left).abs()).max((f_at - e_at).abs());
    }
    Ok(LogNormalFit {
        mu,
        sigma,
        ks_distance: ks.clamp(0.0, 1.0),
    })
}
