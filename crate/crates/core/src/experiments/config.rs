use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Concentration,
    Deletion,
    CrucialDistribution,
    Alteration,
    TalagrandSanity,
}

impl ExperimentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExperimentKind::Concentration => "concentration",
            ExperimentKind::Deletion => "deletion",
            ExperimentKind::CrucialDistribution => "crucial_distribution",
            ExperimentKind::Alteration => "alteration",
            ExperimentKind::TalagrandSanity => "talagrand_sanity",
        }
    }
}

fn default_budget() -> f64 {
    10.0
}

/// Experiment description, read from and echoed to JSON.
///
/// Kind-specific knobs: `x` and `fixed_graph` (deletion), `r` (crucial
/// distribution), `b_grid`, `t_grid` and `slack` (Talagrand sanity),
/// `mass_target` (concentration). A knob given for the wrong kind is an error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub master_seed: u64,
    #[serde(default = "default_budget")]
    pub solver_budget_secs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_graph: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_grid: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_grid: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass_target: Option<f64>,
}

pub const DEFAULT_MASS_TARGET: f64 = 0.9;
pub const DEFAULT_SLACK: f64 = 0.05;

impl ExperimentConfig {
    /// Config with no kind-specific knobs set.
    pub fn new(kind: ExperimentKind, n: usize, p: f64, trials: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            kind,
            n,
            p,
            trials,
            master_seed,
            solver_budget_secs: default_budget(),
            x: None,
            fixed_graph: None,
            r: None,
            b_grid: None,
            t_grid: None,
            slack: None,
            mass_target: None,
        }
    }

    pub fn solver_budget(&self) -> Duration {
        Duration::from_secs_f64(self.solver_budget_secs.max(0.0))
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidConfig { kind: self.kind.as_str(), reason: reason.into() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::NoTrials);
        }
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        check_probability("p", self.p)?;
        if !(self.solver_budget_secs >= 0.0 && self.solver_budget_secs.is_finite()) {
            return Err(self.invalid("solver_budget_secs must be a finite non-negative number"));
        }
        use ExperimentKind::*;
        let knobs: [(&str, bool, bool); 7] = [
            ("x", self.x.is_some(), self.kind == Deletion),
            ("fixed_graph", self.fixed_graph.is_some(), self.kind == Deletion),
            ("r", self.r.is_some(), self.kind == CrucialDistribution),
            ("b_grid", self.b_grid.is_some(), self.kind == TalagrandSanity),
            ("t_grid", self.t_grid.is_some(), self.kind == TalagrandSanity),
            ("slack", self.slack.is_some(), self.kind == TalagrandSanity),
            ("mass_target", self.mass_target.is_some(), self.kind == Concentration),
        ];
        for (name, present, allowed) in knobs {
            if present && !allowed {
                return Err(self.invalid(format!("knob `{name}` does not apply")));
            }
        }
        match self.kind {
            Deletion if self.x.is_none() => return Err(self.invalid("missing knob `x`")),
            CrucialDistribution if self.r.is_none() => return Err(self.invalid("missing knob `r`")),
            TalagrandSanity if self.b_grid.is_none() || self.t_grid.is_none() => {
                return Err(self.invalid("missing knob `b_grid` or `t_grid`"))
            }
            _ => {}
        }
        if let Some(target) = self.mass_target {
            check_probability("mass_target", target)?;
        }
        Ok(())
    }

    pub(crate) fn expect_kind(&self, kind: ExperimentKind) -> Result<()> {
        if self.kind != kind {
            return Err(self.invalid(format!("runner for `{}` called", kind.as_str())));
        }
        self.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{"kind":"deletion","n":100,"p":0.3,"trials":10,"master_seed":1,"x":2.5}"#,
        )
        .unwrap();
        assert_eq!(cfg.solver_budget_secs, 10.0);
        cfg.validate().unwrap();

        let missing = ExperimentConfig::new(ExperimentKind::Deletion, 10, 0.5, 3, 0);
        assert!(matches!(missing.validate(), Err(Error::InvalidConfig { .. })));

        let mut wrong = ExperimentConfig::new(ExperimentKind::Concentration, 10, 0.5, 3, 0);
        wrong.r = Some(2);
        assert!(matches!(wrong.validate(), Err(Error::InvalidConfig { .. })));

        let zero = ExperimentConfig::new(ExperimentKind::Alteration, 10, 0.5, 0, 0);
        assert_eq!(zero.validate(), Err(Error::NoTrials));

        assert!(serde_json::from_str::<ExperimentConfig>(
            r#"{"kind":"alteration","n":10,"p":0.5,"trials":1,"master_seed":1,"bogus":1}"#
        )
        .is_err());
    }

    #[test]
    fn echo_omits_absent_knobs() {
        let cfg = ExperimentConfig::new(ExperimentKind::Alteration, 10, 0.5, 2, 3);
        let j = serde_json::to_string(&cfg).unwrap();
        assert_eq!(
            j,
            r#"{"kind":"alteration","n":10,"p":0.5,"trials":2,"master_seed":3,"solver_budget_secs":10.0}"#
        );
    }
}
