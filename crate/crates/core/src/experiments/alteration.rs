use std::time::Instant;

use super::config::ExperimentKind;
use super::report::{AlterationSummary, ExperimentReport, Summary, TrialRecord};
use super::run_trials;
use crate::analytics::critical_r_hat;
use crate::error::{Error, Result};
use crate::graph::{sample_gnp, GnpParams};
use crate::solver::{alteration_dominating_set, domination_number_exact, greedy_dominating_set, SolveStatus};
use crate::ExperimentConfig;

/// Graphs up to this size are also solved exactly.
pub const EXACT_SOLVE_LIMIT: usize = 200;

/// Alteration with prefix size `r = ⌊n ln d / d⌋`, compared with greedy and
/// with the first-moment lower bound `r̂`.
pub fn run_alteration_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    cfg.expect_kind(ExperimentKind::Alteration)?;
    let params = GnpParams::new(cfg.n, cfg.p)?;
    let d = params.d();
    if d <= 1.0 {
        return Err(Error::DegreeTooSmall { d });
    }
    let scale = cfg.n as f64 * d.ln() / d;
    let r = (scale.floor() as usize).min(cfg.n);
    let r_hat = critical_r_hat(cfg.n, cfg.p)?;
    let budget = cfg.solver_budget();

    let records = run_trials(cfg, threads, |i, seed| {
        let start = Instant::now();
        let g = sample_gnp(&params, seed)?;
        let alt = alteration_dominating_set(&g, r)?;
        let mut rec = TrialRecord::new(i, seed);
        rec.alteration_size = Some(alt.len());
        rec.greedy_size = Some(greedy_dominating_set(&g).len());
        if cfg.n <= EXACT_SOLVE_LIMIT {
            let solved = domination_number_exact(&g, budget, None);
            rec.status = Some(solved.status);
            rec.domination_number = (solved.status == SolveStatus::Exact).then_some(solved.size);
            rec.witness_size = Some(solved.size);
        }
        rec.millis = start.elapsed().as_millis() as u64;
        Ok(rec)
    })?;

    let k = records.len() as f64;
    let ratios: Vec<f64> = records.iter().map(|r| r.alteration_size.unwrap() as f64 / scale).collect();
    let summary = AlterationSummary {
        r,
        scale,
        mean_ratio: ratios.iter().sum::<f64>() / k,
        max_ratio: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        max_alteration_size: records.iter().map(|r| r.alteration_size.unwrap()).max().unwrap_or(0),
        mean_greedy_ratio: records.iter().map(|r| r.greedy_size.unwrap() as f64 / scale).sum::<f64>() / k,
        r_hat,
        all_above_r_hat: records.iter().all(|rec| {
            rec.greedy_size.unwrap() > r_hat && rec.domination_number.is_none_or(|d| d > r_hat)
        }),
    };
    Ok(ExperimentReport {
        software_version: crate::VERSION.to_string(),
        config: cfg.clone(),
        sample_path: params.sample_path(),
        prediction: None,
        records,
        summary: Summary::Alteration(summary),
    })
}
