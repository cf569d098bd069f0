//! Small statistics helpers for the reports.

use std::collections::BTreeMap;

use statrs::distribution::{ChiSquared, ContinuousCDF};

pub fn histogram<I: IntoIterator<Item = usize>>(values: I) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

/// Lower median: element `⌊(k-1)/2⌋` of the sorted sample.
pub fn lower_median(values: &[usize]) -> Option<usize> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_unstable();
    Some(v[(v.len() - 1) / 2])
}

pub fn mean_and_variance(values: &[f64]) -> (f64, f64) {
    let k = values.len() as f64;
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / k;
    let var = if values.len() > 1 {
        values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1.0)
    } else {
        0.0
    };
    (mean, var)
}

/// Pearson goodness of fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

/// Chi-square test of `observed` counts against `probabilities` over the same
/// categories. Adjacent categories are pooled from the outside in until each
/// pooled bin expects at least `min_expected` observations.
pub fn chi_square_test(observed: &[usize], probabilities: &[f64], min_expected: f64) -> ChiSquareTest {
    assert_eq!(observed.len(), probabilities.len());
    let total: usize = observed.iter().sum();
    let expected: Vec<f64> = probabilities.iter().map(|p| p * total as f64).collect();
    let bins = pool_bins(observed, &expected, min_expected);
    let statistic = bins.iter().map(|(o, e)| (o - e) * (o - e) / e).sum::<f64>();
    let dof = bins.len().saturating_sub(1);
    let p_value = if dof == 0 {
        1.0
    } else {
        1.0 - ChiSquared::new(dof as f64).expect("positive dof").cdf(statistic)
    };
    ChiSquareTest { statistic, degrees_of_freedom: dof, p_value }
}

fn pool_bins(observed: &[usize], expected: &[f64], min_expected: f64) -> Vec<(f64, f64)> {
    let mut bins: Vec<(f64, f64)> = Vec::new();
    let mut acc = (0.0, 0.0);
    for (&o, &e) in observed.iter().zip(expected) {
        acc.0 += o as f64;
        acc.1 += e;
        if acc.1 >= min_expected {
            bins.push(acc);
            acc = (0.0, 0.0);
        }
    }
    if acc.1 > 0.0 || acc.0 > 0.0 {
        match bins.last_mut() {
            Some(last) => {
                last.0 += acc.0;
                last.1 += acc.1;
            }
            None => bins.push(acc),
        }
    }
    bins.retain(|b| b.1 > 0.0);
    bins
}
