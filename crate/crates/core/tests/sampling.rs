//! Distributional checks of the samplers over many seeds.

use domlab::experiments::stats::chi_square_test;
use domlab::graph::{delete_edges, sample_gnp, GnpParams, SamplePath};
use domlab::Graph;
use statrs::distribution::{Binomial, ChiSquared, ContinuousCDF, Discrete, DiscreteCDF};

const ALPHA: f64 = 0.001;

fn edge_counts(n: usize, p: f64, seeds: u64) -> Vec<u64> {
    let params = GnpParams::new(n, p).unwrap();
    (0..seeds).map(|s| sample_gnp(&params, s).unwrap().edge_count() as u64).collect()
}

fn assert_mean_within_4_sigma(values: &[u64], mean: f64, var: f64) {
    let k = values.len() as f64;
    let got = values.iter().sum::<u64>() as f64 / k;
    let sigma = (var / k).sqrt();
    assert!((got - mean).abs() <= 4.0 * sigma, "mean {got} vs {mean} (sigma {sigma})");
}

/// Chi-square of `values` against `Binomial(trials, p)` in `bins` roughly
/// equiprobable bins cut at the binomial quantiles.
fn binomial_goodness_of_fit(values: &[u64], trials: u64, p: f64, bins: usize) -> f64 {
    let law = Binomial::new(p, trials).unwrap();
    let mut cuts: Vec<u64> = (1..bins).map(|j| law.inverse_cdf(j as f64 / bins as f64)).collect();
    cuts.dedup();
    // bin j holds (cuts[j-1], cuts[j]]
    let mut probs = Vec::new();
    let mut prev = 0.0;
    for &c in &cuts {
        let cdf = law.cdf(c);
        probs.push(cdf - prev);
        prev = cdf;
    }
    probs.push(1.0 - prev);
    let mut observed = vec![0usize; probs.len()];
    for &v in values {
        observed[cuts.partition_point(|&c| c < v)] += 1;
    }
    chi_square_test(&observed, &probs, 5.0).p_value
}

#[test]
fn skip_path_edge_count_is_binomial() {
    let (n, p) = (1000, 0.01);
    assert_eq!(SamplePath::for_probability(p), SamplePath::GeometricSkip);
    let pairs = (n * (n - 1) / 2) as u64;
    let counts = edge_counts(n, p, 2000);
    assert_mean_within_4_sigma(&counts, pairs as f64 * p, pairs as f64 * p * (1.0 - p));
    let pv = binomial_goodness_of_fit(&counts, pairs, p, 20);
    assert!(pv > ALPHA, "p-value {pv}");
}

#[test]
fn bernoulli_path_edge_count_is_binomial() {
    let (n, p) = (120, 0.3);
    assert_eq!(SamplePath::for_probability(p), SamplePath::Bernoulli);
    let pairs = (n * (n - 1) / 2) as u64;
    let counts = edge_counts(n, p, 2000);
    assert_mean_within_4_sigma(&counts, pairs as f64 * p, pairs as f64 * p * (1.0 - p));
    let pv = binomial_goodness_of_fit(&counts, pairs, p, 20);
    assert!(pv > ALPHA, "p-value {pv}");
}

/// Every pair must be equally likely: catches off-by-one row walks.
#[test]
fn skip_path_pairs_are_uniform() {
    let (n, p, seeds) = (30usize, 0.05, 4000u64);
    let params = GnpParams::new(n, p).unwrap();
    let mut hits = vec![vec![0u64; n]; n];
    for s in 0..seeds {
        for (u, v) in sample_gnp(&params, s).unwrap().edges() {
            hits[u][v] += 1;
        }
    }
    let expected = seeds as f64 * p;
    let var = expected * (1.0 - p);
    let mut statistic = 0.0;
    let mut pairs = 0;
    for u in 0..n {
        for v in u + 1..n {
            statistic += (hits[u][v] as f64 - expected).powi(2) / var;
            pairs += 1;
        }
    }
    let pv = 1.0 - ChiSquared::new(pairs as f64).unwrap().cdf(statistic);
    assert!(pv > ALPHA, "statistic {statistic} on {pairs} pairs, p-value {pv}");
}

#[test]
fn skip_path_degree_is_binomial() {
    let (n, p) = (400, 0.02);
    let params = GnpParams::new(n, p).unwrap();
    // last vertex: reached only through the end of every row
    let degrees: Vec<u64> = (0..3000).map(|s| sample_gnp(&params, s).unwrap().degree(n - 1) as u64).collect();
    let law = Binomial::new(p, (n - 1) as u64).unwrap();
    let max = *degrees.iter().max().unwrap() as usize;
    let mut observed = vec![0usize; max + 2];
    for &d in &degrees {
        observed[d as usize] += 1;
    }
    let mut probs: Vec<f64> = (0..=max as u64).map(|k| law.pmf(k)).collect();
    probs.push(1.0 - probs.iter().sum::<f64>());
    let pv = chi_square_test(&observed, &probs, 5.0).p_value;
    assert!(pv > ALPHA, "p-value {pv}");
}

#[test]
fn deletion_keeps_binomial_share_of_k10() {
    let g = Graph::complete(10);
    let p_del = 0.3;
    let kept: Vec<u64> = (0..3000).map(|s| delete_edges(&g, p_del, s).unwrap().edge_count() as u64).collect();
    assert_mean_within_4_sigma(&kept, 45.0 * 0.7, 45.0 * 0.7 * 0.3);
    for s in 0..50 {
        let f = delete_edges(&g, p_del, s).unwrap();
        assert!(f.edges().all(|(u, v)| g.has_edge(u, v)));
    }
}

#[test]
fn samples_are_reproducible_and_seed_sensitive() {
    for p in [0.01, 0.5] {
        let params = GnpParams::new(300, p).unwrap();
        let a = sample_gnp(&params, 42).unwrap();
        assert_eq!(a, sample_gnp(&params, 42).unwrap());
        assert_ne!(a, sample_gnp(&params, 43).unwrap());
    }
}
