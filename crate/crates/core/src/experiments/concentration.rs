use std::time::Instant;

use super::config::{ExperimentKind, DEFAULT_MASS_TARGET};
use super::report::{ConcentrationSummary, ExperimentReport, Summary, TrialRecord};
use super::{run_trials, stats};
use crate::analytics::predicted_interval;
use crate::error::Result;
use crate::graph::{sample_gnp, GnpParams};
use crate::solver::{domination_number_exact, SolveStatus};
use crate::ExperimentConfig;

/// Samples `G(n,p)` per trial, solves it exactly and compares the empirical
/// distribution of `D` with the predicted interval.
pub fn run_concentration_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    cfg.expect_kind(ExperimentKind::Concentration)?;
    let params = GnpParams::new(cfg.n, cfg.p)?;
    let prediction = predicted_interval(cfg.n, cfg.p)?;
    let budget = cfg.solver_budget();

    let records = run_trials(cfg, threads, |i, seed| {
        let start = Instant::now();
        let g = sample_gnp(&params, seed)?;
        let solved = domination_number_exact(&g, budget, None);
        let mut rec = TrialRecord::new(i, seed);
        rec.status = Some(solved.status);
        rec.domination_number = (solved.status == SolveStatus::Exact).then_some(solved.size);
        rec.witness_size = Some(solved.size);
        rec.millis = start.elapsed().as_millis() as u64;
        Ok(rec)
    })?;

    let exact: Vec<usize> = records.iter().filter_map(|r| r.domination_number).collect();
    let in_interval = exact.iter().filter(|&&d| prediction.contains(d)).count();
    let mass_target = cfg.mass_target.unwrap_or(DEFAULT_MASS_TARGET);
    let mass = if exact.is_empty() { 0.0 } else { in_interval as f64 / exact.len() as f64 };
    let summary = ConcentrationSummary {
        exact_trials: exact.len(),
        timeouts: records.len() - exact.len(),
        exact_fraction: exact.len() as f64 / records.len() as f64,
        histogram: stats::histogram(exact.iter().copied()),
        median: stats::lower_median(&exact),
        r_hat: prediction.r_hat,
        interval: prediction.interval,
        mass_on_interval: mass,
        mass_target,
        meets_target: mass >= mass_target,
        at_or_below_r_hat: exact.iter().filter(|&&d| d <= prediction.r_hat).count(),
    };
    Ok(ExperimentReport {
        software_version: crate::VERSION.to_string(),
        config: cfg.clone(),
        sample_path: params.sample_path(),
        prediction: Some(prediction),
        records,
        summary: Summary::Concentration(summary),
    })
}
