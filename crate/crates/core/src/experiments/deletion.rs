use std::time::Instant;

use super::config::ExperimentKind;
use super::report::{DeletionSummary, ExperimentReport, Summary, TrialRecord};
use super::run_trials;
use crate::analytics::{deletion_probability, survival_probability};
use crate::error::Result;
use crate::graph::{delete_edges, sample_gnp, GnpParams, Graph, VertexSet};
use crate::rng::mix;
use crate::solver::greedy_dominating_set;
use crate::ExperimentConfig;

/// Stream index of the shared graph when `fixed_graph` is set.
const FIXED_GRAPH_STREAM: u64 = u64::MAX;
/// Sub-stream of a trial seed used for the deletion coins.
const DELETION_STREAM: u64 = 1;

/// Two-stage procedure: draw `G`, take the greedy dominating set `S`, then
/// delete each edge with probability `p'' = x/(n√p)` and record whether any
/// crucial edge of `S` was hit.
///
/// With `fixed_graph`, one graph (and set) is drawn from the master seed and
/// every trial is a fresh deletion round on it.
pub fn run_deletion_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    cfg.expect_kind(ExperimentKind::Deletion)?;
    let params = GnpParams::new(cfg.n, cfg.p)?;
    let x = cfg.x.expect("validated");
    let p_del = deletion_probability(cfg.n, cfg.p, x)?;
    let fixed = cfg.fixed_graph.unwrap_or(false);

    let shared = if fixed {
        let g = sample_gnp(&params, mix(cfg.master_seed, FIXED_GRAPH_STREAM))?;
        let s = greedy_dominating_set(&g);
        let crucial = g.crucial_edges(&s)?;
        Some((g, s, crucial))
    } else {
        None
    };

    let records = run_trials(cfg, threads, |i, seed| {
        let start = Instant::now();
        let owned;
        let (g, s, crucial): (&Graph, &VertexSet, &[(usize, usize)]) = match &shared {
            Some((g, s, c)) => (g, s, c),
            None => {
                let g = sample_gnp(&params, seed)?;
                let s = greedy_dominating_set(&g);
                let c = g.crucial_edges(&s)?;
                owned = (g, s, c);
                (&owned.0, &owned.1, &owned.2)
            }
        };
        let f = delete_edges(g, p_del, mix(seed, DELETION_STREAM))?;
        let mut rec = TrialRecord::new(i, seed);
        rec.witness_size = Some(s.len());
        rec.crucial_count = Some(crucial.len());
        rec.survived = Some(crucial.iter().all(|&(a, b)| f.has_edge(a, b)));
        rec.still_dominating = Some(f.is_dominating(s)?);
        rec.analytic_survival = Some(survival_probability(crucial.len(), p_del));
        rec.millis = start.elapsed().as_millis() as u64;
        Ok(rec)
    })?;

    let k = records.len() as f64;
    let freq = |pick: fn(&TrialRecord) -> bool| records.iter().filter(|r| pick(r)).count() as f64 / k;
    let survival_frequency = freq(|r| r.survived == Some(true));
    let still_dominating_frequency = freq(|r| r.still_dominating == Some(true));
    let analytic: Vec<f64> = records.iter().map(|r| r.analytic_survival.unwrap()).collect();
    let mean_analytic = analytic.iter().sum::<f64>() / k;
    // each round is Bernoulli(P_i); the frequency has variance Σ P_i (1 - P_i) / k²
    let standard_error = (analytic.iter().map(|q| q * (1.0 - q)).sum::<f64>()).sqrt() / k;
    let z_score = if standard_error > 0.0 {
        (survival_frequency - mean_analytic) / standard_error
    } else if survival_frequency == mean_analytic {
        0.0
    } else {
        f64::INFINITY
    };
    let summary = DeletionSummary {
        p_del,
        rounds: records.len(),
        fixed_graph: fixed,
        mean_crucial_count: records.iter().map(|r| r.crucial_count.unwrap() as f64).sum::<f64>() / k,
        survival_frequency,
        mean_analytic_survival: mean_analytic,
        standard_error,
        z_score,
        still_dominating_frequency,
    };
    Ok(ExperimentReport {
        software_version: crate::VERSION.to_string(),
        config: cfg.clone(),
        sample_path: params.sample_path(),
        prediction: None,
        records,
        summary: Summary::Deletion(summary),
    })
}
