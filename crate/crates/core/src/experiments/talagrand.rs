use std::time::Instant;

use super::config::{ExperimentKind, DEFAULT_SLACK};
use super::report::{ExperimentReport, Summary, TalagrandCell, TalagrandSummary, TrialRecord};
use super::{run_trials, stats};
use crate::analytics::talagrand_tail_product_bound;
use crate::error::Result;
use crate::graph::{sample_gnp, GnpParams};
use crate::solver::{domination_number_exact, SolveStatus};
use crate::ExperimentConfig;

/// Empirical `P(D <= b) · P(D >= b + t)` against `exp(-t²/(4(n-b)))` over a
/// grid of `(b, t)`, each cell allowed `slack` for sampling error.
pub fn run_talagrand_sanity(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    cfg.expect_kind(ExperimentKind::TalagrandSanity)?;
    let params = GnpParams::new(cfg.n, cfg.p)?;
    let budget = cfg.solver_budget();
    let slack = cfg.slack.unwrap_or(DEFAULT_SLACK);
    let b_grid = cfg.b_grid.clone().expect("validated");
    let t_grid = cfg.t_grid.clone().expect("validated");
    // validate the grid before spending time on trials
    for &b in &b_grid {
        for &t in &t_grid {
            talagrand_tail_product_bound(cfg.n, b, t)?;
        }
    }

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
    let k = exact.len() as f64;
    let mut cells = Vec::with_capacity(b_grid.len() * t_grid.len());
    for &b in &b_grid {
        for &t in &t_grid {
            let bound = talagrand_tail_product_bound(cfg.n, b, t)?;
            let (lower_tail, upper_tail) = if exact.is_empty() {
                (0.0, 0.0)
            } else {
                (
                    exact.iter().filter(|&&d| d as f64 <= b).count() as f64 / k,
                    exact.iter().filter(|&&d| d as f64 >= b + t).count() as f64 / k,
                )
            };
            let product = lower_tail * upper_tail;
            cells.push(TalagrandCell { b, t, lower_tail, upper_tail, product, bound, satisfied: product <= bound + slack });
        }
    }
    let summary = TalagrandSummary {
        exact_trials: exact.len(),
        timeouts: records.len() - exact.len(),
        histogram: stats::histogram(exact.iter().copied()),
        median: stats::lower_median(&exact),
        slack,
        all_satisfied: cells.iter().all(|c| c.satisfied),
        cells,
    };
    Ok(ExperimentReport {
        software_version: crate::VERSION.to_string(),
        config: cfg.clone(),
        sample_path: params.sample_path(),
        prediction: None,
        records,
        summary: Summary::TalagrandSanity(summary),
    })
}
