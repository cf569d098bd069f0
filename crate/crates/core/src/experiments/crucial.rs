use std::time::Instant;

use super::config::ExperimentKind;
use super::report::{CrucialSummary, ExperimentReport, Summary, TrialRecord};
use super::{run_trials, stats};
use crate::analytics::crucial_edge_law;
use crate::analytics::logspace::{ln_miss, log1mexp};
use crate::error::{Error, Result};
use crate::graph::{sample_gnp, GnpParams, VertexSet};
use crate::rng::mix;
use crate::ExperimentConfig;

/// Rejection sampling is refused below this acceptance probability.
pub const MIN_ACCEPTANCE_PROBABILITY: f64 = 1e-6;

/// Draws `G(n,p)` until `S = {0, …, r-1}` dominates, then records `|C_G(S)|`.
/// The accepted counts are compared with `Binomial(n - r, p*)`.
pub fn run_crucial_distribution_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    cfg.expect_kind(ExperimentKind::CrucialDistribution)?;
    let params = GnpParams::new(cfg.n, cfg.p)?;
    let r = cfg.r.expect("validated");
    let law = crucial_edge_law(cfg.n, cfg.p, r)?;
    // P(S dominates) = (1 - (1-p)^r)^{n-r}
    let acceptance = ((cfg.n - r) as f64 * log1mexp(ln_miss(cfg.p, r))).exp();
    if !(acceptance >= MIN_ACCEPTANCE_PROBABILITY) {
        return Err(Error::Infeasible { probability: acceptance, floor: MIN_ACCEPTANCE_PROBABILITY });
    }
    let set = VertexSet::prefix(cfg.n, r);

    let records = run_trials(cfg, threads, |i, seed| {
        let start = Instant::now();
        let mut attempt = 0u64;
        let (g, attempts) = loop {
            let g = sample_gnp(&params, mix(seed, attempt))?;
            attempt += 1;
            if g.is_dominating(&set)? {
                break (g, attempt);
            }
        };
        let mut rec = TrialRecord::new(i, seed);
        rec.crucial_count = Some(g.crucial_set(&set)?.len());
        rec.attempts = Some(attempts);
        rec.millis = start.elapsed().as_millis() as u64;
        Ok(rec)
    })?;

    let counts: Vec<usize> = records.iter().map(|r| r.crucial_count.unwrap()).collect();
    let values: Vec<f64> = counts.iter().map(|&c| c as f64).collect();
    let (mean, variance) = stats::mean_and_variance(&values);
    let accepted = counts.len();
    let law_var = law.variance();
    let mean_z_score = if law_var > 0.0 {
        (mean - law.mu) / (law_var / accepted as f64).sqrt()
    } else if mean == law.mu {
        0.0
    } else {
        f64::INFINITY
    };
    let mut observed = vec![0usize; law.trials + 1];
    for &c in &counts {
        observed[c] += 1;
    }
    let probabilities: Vec<f64> = (0..=law.trials).map(|k| law.pmf(k)).collect();
    let chi = stats::chi_square_test(&observed, &probabilities, 5.0);
    let summary = CrucialSummary {
        r,
        p_star: law.p_star,
        mu: law.mu,
        accepted,
        total_attempts: records.iter().map(|r| r.attempts.unwrap()).sum(),
        acceptance_probability: acceptance,
        empirical_mean: mean,
        empirical_variance: variance,
        mean_z_score,
        histogram: stats::histogram(counts.iter().copied()),
        chi_square: chi.statistic,
        degrees_of_freedom: chi.degrees_of_freedom,
        p_value: chi.p_value,
    };
    Ok(ExperimentReport {
        software_version: crate::VERSION.to_string(),
        config: cfg.clone(),
        sample_path: params.sample_path(),
        prediction: None,
        records,
        summary: Summary::CrucialDistribution(summary),
    })
}
