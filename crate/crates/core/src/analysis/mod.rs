//! Experiments over many games: random-play histograms and their log-normal
//! fit, closed-form length bounds next to measured LGS lengths, the
//! higher-index repetition checker and the invariant verification suite.

mod bounds;
mod fit;
mod lemma;
mod simulate;
mod verify;

pub use bounds::{bounds_report, log_phi, ratio_series, ratio_csv, BoundsReport, RatioPoint, PHI};
pub use fit::{fit_lognormal, fit_logs, fit_samples, LogNormalFit};
pub use lemma::{
    classify_higher, is_allowed_transition, lemma_checker, LemmaCheckpointReport, LemmaState,
    LemmaViolation,
};
pub use simulate::{simulate_random, Histogram, SimulationSummary};
pub use verify::{verify_playouts, FaultInjection, VerifyReport};
