//! Seeded Monte Carlo harnesses.
//!
//! Trial `i` draws everything from `mix(master_seed, i)`, and records are
//! gathered in trial order after all workers join. Reports are therefore a
//! function of the config alone, whatever the thread count.

mod alteration;
mod concentration;
mod config;
mod crucial;
mod deletion;
mod report;
pub mod stats;
mod talagrand;

pub use alteration::run_alteration_experiment;
pub use concentration::run_concentration_experiment;
pub use config::{ExperimentConfig, ExperimentKind};
pub use crucial::{run_crucial_distribution_experiment, MIN_ACCEPTANCE_PROBABILITY};
pub use deletion::run_deletion_experiment;
pub use report::{
    AlterationSummary, ConcentrationSummary, CrucialSummary, DeletionSummary, ExperimentReport, Summary,
    TalagrandCell, TalagrandSummary, TrialRecord, CSV_COLUMNS,
};
pub use talagrand::run_talagrand_sanity;

use rayon::prelude::*;

use crate::error::Result;
use crate::rng::mix;

/// Runs whichever experiment `cfg.kind` names.
pub fn run_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    match cfg.kind {
        ExperimentKind::Concentration => run_concentration_experiment(cfg, threads),
        ExperimentKind::Deletion => run_deletion_experiment(cfg, threads),
        ExperimentKind::CrucialDistribution => run_crucial_distribution_experiment(cfg, threads),
        ExperimentKind::Alteration => run_alteration_experiment(cfg, threads),
        ExperimentKind::TalagrandSanity => run_talagrand_sanity(cfg, threads),
    }
}

/// Seed of trial `index`.
pub fn trial_seed(master_seed: u64, index: usize) -> u64 {
    mix(master_seed, index as u64)
}

/// Maps `trial(index, seed)` over all trials on `threads` workers, keeping
/// trial order.
pub(crate) fn run_trials<T, F>(cfg: &ExperimentConfig, threads: usize, trial: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize, u64) -> Result<T> + Sync + Send,
{
    let master = cfg.master_seed;
    let job = || {
        (0..cfg.trials)
            .into_par_iter()
            .map(|i| trial(i, trial_seed(master, i)))
            .collect::<Result<Vec<T>>>()
    };
    if threads <= 1 {
        return (0..cfg.trials).map(|i| trial(i, trial_seed(master, i))).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| crate::Error::Io(e.to_string()))?;
    pool.install(job)
}
