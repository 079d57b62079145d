use serde::Serialize;

use crate::error::{Error, Result};
use crate::fib::z_count;
use crate::strategy::lgs_length;

/// The golden ratio.
pub const PHI: f64 = 1.618_033_988_749_895;

pub fn log_phi(x: f64) -> f64 {
    x.ln() / PHI.ln()
}

/// Closed-form length bounds for `n` next to the measured LGS length.
///
/// `lower_leading` and `refined_upper_leading` keep only the leading terms
/// `n^2/2 - n log_phi n` and `n^2/2 - n log_phi(n) / 32`. `ratio` uses the
/// LGS length as a stand-in for the maximal game length, which is exact only
/// if LGS is optimal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    pub shortest: u64,
    pub upper: u64,
    pub c_n: f64,
    pub lower_leading: f64,
    pub refined_upper_leading: f64,
    pub lgs_length: u64,
    pub ratio: f64,
    pub phi: f64,
}

fn check_n(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::StartTooSmall { n, min: 2 });
    }
    Ok(())
}

fn ratio(n: u64, lgs: u64) -> f64 {
    let nf = n as f64;
    (nf * nf / 2.0 - lgs as f64) / (nf * log_phi(nf))
}

pub fn bounds_report(n: u64) -> Result<BoundsReport> {
    check_n(n)?;
    let nf = n as f64;
    let lgs = lgs_length(n)?;
    Ok(BoundsReport {
        n,
        shortest: n - z_count(n)? as u64,
        upper: n * (n - 1) / 2,
        c_n: log_phi(5f64.sqrt() * nf + 0.5) - 1.0,
        lower_leading: nf * nf / 2.0 - nf * log_phi(nf),
        refined_upper_leading: nf * nf / 2.0 - nf * log_phi(nf) / 32.0,
        lgs_length: lgs,
        ratio: ratio(n, lgs),
        phi: PHI,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioPoint {
    pub n: u64,
    pub lgs_length: u64,
    pub ratio: f64,
}

/// `(n^2/2 - LGS(n)) / (n log_phi n)` for each `n`.
pub fn ratio_series(n_values: &[u64]) -> Result<Vec<RatioPoint>> {
    use rayon::prelude::*;
    n_values.iter().try_for_each(|&n| check_n(n))?;
    n_values
        .par_iter()
        .map(|&n| {
            let lgs = lgs_length(n)?;
            Ok(RatioPoint {
                n,
                lgs_length: lgs,
                ratio: ratio(n, lgs),
            })
        })
        .collect()
}

/// CSV with header `n,lgs_length,ratio`.
pub fn ratio_csv(points: &[RatioPoint]) -> String {
    let mut out = String::from("n,lgs_length,ratio\n");
    for p in points {
        out.push_str(&format!("{},{},{}\n", p.n, p.lgs_length, p.ratio));
    }
    out
}
