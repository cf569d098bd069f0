use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::config::ExperimentConfig;
use crate::error::Result;
use crate::graph::SamplePath;
use crate::solver::SolveStatus;
use crate::Prediction;

/// One trial. Fields that do not apply to the experiment kind are `None` and
/// omitted from JSON. Wall-clock time is kept for the CSV only.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<SolveStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domination_number: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crucial_count: Option<usize>,
    /// No crucial edge was deleted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub survived: Option<bool>,
    /// The set is still dominating after deletion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub still_dominating: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analytic_survival: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alteration_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub greedy_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempts: Option<u64>,
    #[serde(skip)]
    pub millis: u64,
}

impl TrialRecord {
    pub fn new(trial_index: usize, seed: u64) -> Self {
        TrialRecord { trial_index, seed, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationSummary {
    pub exact_trials: usize,
    pub timeouts: usize,
    pub exact_fraction: f64,
    pub histogram: BTreeMap<usize, usize>,
    pub median: Option<usize>,
    pub r_hat: usize,
    pub interval: (usize, usize),
    pub mass_on_interval: f64,
    pub mass_target: f64,
    pub meets_target: bool,
    /// Exact trials with `D <= r̂`.
    pub at_or_below_r_hat: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeletionSummary {
    pub p_del: f64,
    pub rounds: usize,
    pub fixed_graph: bool,
    pub mean_crucial_count: f64,
    pub survival_frequency: f64,
    pub mean_analytic_survival: f64,
    /// Standard error of the survival frequency under the analytic law.
    pub standard_error: f64,
    pub z_score: f64,
    pub still_dominating_frequency: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrucialSummary {
    pub r: usize,
    pub p_star: f64,
    pub mu: f64,
    pub accepted: usize,
    pub total_attempts: u64,
    pub acceptance_probability: f64,
    pub empirical_mean: f64,
    pub empirical_variance: f64,
    pub mean_z_score: f64,
    pub histogram: BTreeMap<usize, usize>,
    pub chi_square: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlterationSummary {
    pub r: usize,
    /// `n ln d / d`.
    pub scale: f64,
    pub mean_ratio: f64,
    pub max_ratio: f64,
    pub max_alteration_size: usize,
    pub mean_greedy_ratio: f64,
    pub r_hat: usize,
    /// Every greedy (and, when solved, exact) size exceeds `r̂`.
    pub all_above_r_hat: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TalagrandCell {
    pub b: f64,
    pub t: f64,
    pub lower_tail: f64,
    pub upper_tail: f64,
    pub product: f64,
    pub bound: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TalagrandSummary {
    pub exact_trials: usize,
    pub timeouts: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub median: Option<usize>,
    pub slack: f64,
    pub cells: Vec<TalagrandCell>,
    pub all_satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Summary {
    Concentration(ConcentrationSummary),
    Deletion(DeletionSummary),
    CrucialDistribution(CrucialSummary),
    Alteration(AlterationSummary),
    TalagrandSanity(TalagrandSummary),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub software_version: String,
    pub config: ExperimentConfig,
    pub sample_path: SamplePath,
    pub prediction: Option<Prediction>,
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
}

pub const CSV_COLUMNS: [&str; 8] =
    ["trial_index", "seed", "status", "D", "witness_size", "crucial_count", "survived", "millis"];

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl ExperimentReport {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| crate::Error::Io(e.to_string()))
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let io = |e: csv::Error| crate::Error::Io(e.to_string());
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_COLUMNS).map_err(io)?;
        for r in &self.records {
            out.write_record([
                r.trial_index.to_string(),
                r.seed.to_string(),
                cell(r.status.map(|s| s.as_str())),
                cell(r.domination_number),
                cell(r.witness_size),
                cell(r.crucial_count),
                cell(r.survived),
                r.millis.to_string(),
            ])
            .map_err(io)?;
        }
        out.flush()?;
        Ok(())
    }
}
