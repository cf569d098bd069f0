use serde::{Deserialize, Serialize};

use super::logspace::{ln_binomial, ln_miss, log1mexp, scaled};
use super::{check_open, check_open_top};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Relative slack on `q >= n` so that `p = 1 - 1/n`, rounded, lands in the
/// very dense branch.
pub const VERY_DENSE_TOLERANCE: f64 = 1e-9;

/// `ln E(X_r) = ln C(n,r) + (n-r) ln(1 - (1-p)^r)`.
///
/// Returns `-inf` when no `r`-set can dominate (`r = 0 < n`, or `p = 0` with
/// `r < n`).
pub fn log_expected_dominating_sets<F: Real>(n: usize, p: F, r: usize) -> Result<F> {
    check_open_top(p)?;
    if r > n {
        return Err(Error::SizeOutOfRange { r, n });
    }
    if r == n {
        return Ok(F::zero());
    }
    if r == 0 {
        return Ok(F::neg_infinity());
    }
    Ok(ln_binomial::<F>(n, r) + scaled(n - r, log1mexp(ln_miss(p, r))))
}

/// `r̂ = min{ r : E(X_r) >= 1/d } - 1`, compared in log space against `-ln d`.
pub fn critical_r_hat<F: Real>(n: usize, p: F) -> Result<usize> {
    check_open_top(p)?;
    let d = F::from_count(n) * p;
    if d <= F::one() {
        return Err(Error::DegreeTooSmall { d: d.to_f64().unwrap() });
    }
    let threshold = -d.ln();
    for r in 1..=n {
        if log_expected_dominating_sets(n, p, r)? >= threshold {
            return Ok(r - 1);
        }
    }
    unreachable!("E(X_n) = 1 > 1/d")
}

/// Closed form `r̂ = log_q(n ln q / ln² n)` for the dense range.
pub fn dense_r_hat<F: Real>(n: usize, p: F) -> Result<F> {
    let pf = check_open(p)?;
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    let ln_q = -(-p).ln_1p();
    let ln_n = F::from_count(n).ln();
    if ln_q > ln_n + F::lit(VERY_DENSE_TOLERANCE) {
        return Err(Error::VeryDense { q: ln_q.exp().to_f64().unwrap(), n });
    }
    if F::from_count(n) * ln_q <= ln_n * ln_n {
        return Err(Error::ClosedFormUndefined { n, p: pf });
    }
    Ok(dense_r_hat_from_logs(ln_n, ln_q))
}

/// `(ln n + ln ln q - 2 ln ln n) / ln q`, from `ln n` and `ln q`.
pub fn dense_r_hat_from_logs<F: Real>(ln_n: F, ln_q: F) -> F {
    (ln_n + ln_q.ln() - F::lit(2.0) * ln_n.ln()) / ln_q
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `q < e`: `r̂` from the threshold search.
    SparseSearch,
    /// `e < q < n`: `r̂` still from the search, closed form reported alongside.
    DenseClosedForm,
    /// `q >= n`: a single vertex dominates with non-vanishing probability.
    VeryDense,
}

/// Predicted two-point support of `D(G)` for `G ~ G(n,p)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationPrediction<F> {
    pub n: usize,
    pub p: F,
    pub q: F,
    pub d: F,
    pub regime: Regime,
    pub r_hat: usize,
    pub interval: (usize, usize),
    /// `-ln d`; serialized `null` in the very dense regime when unused.
    pub log_threshold: F,
    pub log_e_at_r_hat: F,
    pub log_e_at_r_hat_plus_1: F,
    pub log_e_at_r_hat_plus_2: F,
    /// Closed-form `r̂` for comparison when `q > e`.
    pub dense_r_hat: Option<F>,
}

/// Predicted interval `(⌊r̂⌋+1, ⌊r̂⌋+2)`; `(1, 2)` when `q >= n`.
pub fn predicted_interval<F: Real>(n: usize, p: F) -> Result<ConcentrationPrediction<F>> {
    check_open(p)?;
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    let ln_q = -(-p).ln_1p();
    let ln_n = F::from_count(n).ln();
    let d = F::from_count(n) * p;
    let very_dense = ln_q >= ln_n - F::lit(VERY_DENSE_TOLERANCE);
    let (regime, r_hat) = if very_dense {
        (Regime::VeryDense, 0)
    } else if ln_q > F::one() {
        (Regime::DenseClosedForm, critical_r_hat(n, p)?)
    } else {
        (Regime::SparseSearch, critical_r_hat(n, p)?)
    };
    let log_e = |r: usize| -> Result<F> {
        if r > n {
            Ok(F::neg_infinity())
        } else {
            log_expected_dominating_sets(n, p, r)
        }
    };
    let dense = if regime == Regime::DenseClosedForm { dense_r_hat(n, p).ok() } else { None };
    Ok(ConcentrationPrediction {
        n,
        p,
        q: ln_q.exp(),
        d,
        regime,
        r_hat,
        interval: (r_hat + 1, r_hat + 2),
        log_threshold: -d.ln(),
        log_e_at_r_hat: log_e(r_hat)?,
        log_e_at_r_hat_plus_1: log_e(r_hat + 1)?,
        log_e_at_r_hat_plus_2: log_e(r_hat + 2)?,
        dense_r_hat: dense,
    })
}

impl<F: Real> ConcentrationPrediction<F> {
    pub fn contains(&self, size: usize) -> bool {
        size == self.interval.0 || size == self.interval.1
    }
}

/// `ln E(X_{r+α}) - ln E(X_r)` and its leading-order approximation `α ln² d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpectationJump<F> {
    pub log_ratio: F,
    pub asymptotic: F,
}

pub fn log_expectation_ratio<F: Real>(n: usize, p: F, r: usize, alpha: usize) -> Result<ExpectationJump<F>> {
    let lo = log_expected_dominating_sets(n, p, r)?;
    let hi = log_expected_dominating_sets(n, p, r + alpha)?;
    if lo == F::neg_infinity() && hi == F::neg_infinity() {
        return Err(Error::ZeroOverZero);
    }
    let ln_d = (F::from_count(n) * p).ln();
    Ok(ExpectationJump { log_ratio: hi - lo, asymptotic: F::from_count(alpha) * ln_d * ln_d })
}

/// Finite-`n` values of the sparse-range identities at `r = r̂`: both ratios
/// tend to 1 as `d → ∞` with `p → 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SparseTrend<F> {
    pub r_hat: usize,
    /// `(1-p)^r̂ · d / ln² d`.
    pub miss_ratio: F,
    /// `r̂ / (n ln d / d)`.
    pub size_ratio: F,
}

pub fn sparse_trend<F: Real>(n: usize, p: F) -> Result<SparseTrend<F>> {
    let r_hat = critical_r_hat(n, p)?;
    let d = F::from_count(n) * p;
    let ln_d = d.ln();
    Ok(SparseTrend {
        r_hat,
        miss_ratio: (ln_miss(p, r_hat) + d.ln() - F::lit(2.0) * ln_d.ln()).exp(),
        size_ratio: F::from_count(r_hat) / (F::from_count(n) * ln_d / d),
    })
}
