use std::time::Duration;

use domlab::experiments::{trial_seed, Summary, CSV_COLUMNS, MIN_ACCEPTANCE_PROBABILITY};
use domlab::graph::{sample_gnp, GnpParams};
use domlab::solver::{brute_force_domination_number, SolveStatus};
use domlab::{run_experiment, Error, ExperimentConfig, ExperimentKind, ExperimentReport};

fn concentration(n: usize, p: f64, trials: usize, seed: u64) -> ExperimentConfig {
    ExperimentConfig::new(ExperimentKind::Concentration, n, p, trials, seed)
}

fn deletion(n: usize, p: f64, x: f64, trials: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(ExperimentKind::Deletion, n, p, trials, 1);
    cfg.x = Some(x);
    cfg
}

fn crucial(n: usize, p: f64, r: usize, trials: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(ExperimentKind::CrucialDistribution, n, p, trials, 2);
    cfg.r = Some(r);
    cfg
}

fn talagrand(trials: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(ExperimentKind::TalagrandSanity, 30, 0.5, trials, 3);
    cfg.b_grid = Some(vec![1.0, 2.0, 3.0]);
    cfg.t_grid = Some(vec![0.0, 1.0, 2.0]);
    cfg
}

fn all_kinds(trials: usize) -> Vec<ExperimentConfig> {
    vec![
        concentration(30, 0.5, trials, 0),
        deletion(40, 0.3, 0.5, trials),
        crucial(10, 0.5, 2, trials),
        ExperimentConfig::new(ExperimentKind::Alteration, 300, 0.1, trials, 4),
        talagrand(trials),
    ]
}

#[test]
fn zero_trials_rejected_for_every_kind() {
    for cfg in all_kinds(0) {
        assert_eq!(run_experiment(&cfg, 1).unwrap_err(), Error::NoTrials, "{:?}", cfg.kind);
    }
}

#[test]
fn records_carry_derived_seeds_in_order() {
    for cfg in all_kinds(7) {
        let report = run_experiment(&cfg, 3).unwrap();
        assert_eq!(report.records.len(), 7);
        for (i, rec) in report.records.iter().enumerate() {
            assert_eq!(rec.trial_index, i);
            assert_eq!(rec.seed, trial_seed(cfg.master_seed, i));
        }
        assert_eq!(report.config, cfg);
    }
}

#[test]
fn schedule_independent_and_json_round_trips() {
    for cfg in all_kinds(12) {
        let serial = run_experiment(&cfg, 1).unwrap();
        let json = serial.to_json().unwrap();
        for threads in [2, 5] {
            assert_eq!(run_experiment(&cfg, threads).unwrap().to_json().unwrap(), json);
        }
        // timings are not serialized
        let mut untimed = serial.clone();
        untimed.records.iter_mut().for_each(|r| r.millis = 0);
        let back: ExperimentReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, untimed);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["config", "prediction", "records", "summary", "software_version", "sample_path"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn csv_has_fixed_columns() {
    let report = run_experiment(&deletion(30, 0.4, 0.3, 5), 1).unwrap();
    let mut buf = Vec::new();
    report.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
    assert_eq!(lines.count(), 5);
}

#[test]
fn concentration_matches_brute_force_per_seed() {
    let cfg = concentration(20, 0.9, 10, 21);
    let report = run_experiment(&cfg, 2).unwrap();
    let params = GnpParams::new(20, 0.9).unwrap();
    for rec in &report.records {
        let g = sample_gnp(&params, rec.seed).unwrap();
        assert_eq!(rec.domination_number, Some(brute_force_domination_number(&g).unwrap().size));
        assert_eq!(rec.witness_size, rec.domination_number);
    }
    let Summary::Concentration(s) = &report.summary else { panic!() };
    assert_eq!(s.histogram.values().sum::<usize>() + s.timeouts, 10);
    assert!(report.prediction.is_some());
}

#[test]
fn timeouts_are_recorded_not_counted() {
    let mut cfg = concentration(150, 0.3, 4, 5);
    cfg.solver_budget_secs = 0.0;
    let report = run_experiment(&cfg, 1).unwrap();
    let Summary::Concentration(s) = &report.summary else { panic!() };
    assert!(report.records.iter().all(|r| r.status == Some(SolveStatus::Timeout) && r.domination_number.is_none()));
    assert_eq!(s.timeouts, 4);
    assert!(s.histogram.is_empty());
    assert_eq!(s.median, None);
    assert_eq!(s.mass_on_interval, 0.0);
    assert!(!s.meets_target);
    assert_eq!(cfg.solver_budget(), Duration::ZERO);
}

#[test]
fn no_deletion_means_certain_survival() {
    let report = run_experiment(&deletion(60, 0.3, 0.0, 40), 2).unwrap();
    let Summary::Deletion(s) = &report.summary else { panic!() };
    assert_eq!(s.p_del, 0.0);
    assert_eq!(s.survival_frequency, 1.0);
    assert_eq!(s.still_dominating_frequency, 1.0);
    assert_eq!(s.mean_analytic_survival, 1.0);
    assert_eq!(s.z_score, 0.0);
}

#[test]
fn domination_after_deletion_implies_survival() {
    let report = run_experiment(&deletion(12, 0.4, 1.5, 300), 2).unwrap();
    for rec in &report.records {
        if rec.still_dominating == Some(true) {
            assert_eq!(rec.survived, Some(true));
        }
    }
}

#[test]
fn deletion_probability_out_of_range_rejected() {
    // p'' = x / (n √p) = 50 / (10 · 0.5) = 10
    let err = run_experiment(&deletion(10, 0.25, 50.0, 3), 1).unwrap_err();
    assert!(matches!(err, Error::ProbabilityOutOfRange { .. }), "{err:?}");
}

#[test]
fn single_vertex_set_makes_every_edge_crucial() {
    let report = run_experiment(&crucial(9, 0.5, 1, 50), 2).unwrap();
    assert!(report.records.iter().all(|r| r.crucial_count == Some(8)));
    let Summary::CrucialDistribution(s) = &report.summary else { panic!() };
    assert_eq!(s.p_star, 1.0);
    assert_eq!(s.mu, 8.0);
}

#[test]
fn hopeless_conditioning_rejected() {
    let err = run_experiment(&crucial(400, 0.01, 2, 10), 1).unwrap_err();
    match err {
        Error::Infeasible { probability, floor } => {
            assert!(probability < floor);
            assert_eq!(floor, MIN_ACCEPTANCE_PROBABILITY);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn alteration_needs_growing_degree() {
    let cfg = ExperimentConfig::new(ExperimentKind::Alteration, 100, 0.01, 3, 0);
    assert_eq!(run_experiment(&cfg, 1).unwrap_err(), Error::DegreeTooSmall { d: 1.0 });
}

#[test]
fn alteration_sizes_sit_above_r_hat() {
    let cfg = ExperimentConfig::new(ExperimentKind::Alteration, 60, 0.3, 8, 9);
    let report = run_experiment(&cfg, 2).unwrap();
    let Summary::Alteration(s) = &report.summary else { panic!() };
    assert!(s.all_above_r_hat);
    for rec in &report.records {
        let d = rec.domination_number.unwrap();
        assert!(d <= rec.greedy_size.unwrap() && d <= rec.alteration_size.unwrap());
    }
}

#[test]
fn zero_gap_row_is_trivially_satisfied() {
    let report = run_experiment(&talagrand(40), 2).unwrap();
    let Summary::TalagrandSanity(s) = &report.summary else { panic!() };
    assert_eq!(s.cells.len(), 9);
    for c in s.cells.iter().filter(|c| c.t == 0.0) {
        assert_eq!(c.bound, 1.0);
        assert!(c.satisfied);
    }
}

#[test]
fn wrong_knobs_rejected() {
    let mut cfg = concentration(20, 0.5, 3, 0);
    cfg.x = Some(1.0);
    assert!(matches!(run_experiment(&cfg, 1), Err(Error::InvalidConfig { .. })));
    let mut cfg = deletion(20, 0.5, 1.0, 3);
    cfg.x = None;
    assert!(matches!(run_experiment(&cfg, 1), Err(Error::InvalidConfig { .. })));
}
