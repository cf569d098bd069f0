//! Closed-form quantities for `G(n,p)` domination, evaluated in log space.
//!
//! `X_r` is the number of dominating sets of size `r`. Everything here is a
//! pure function of its arguments.

mod crucial;
mod expectation;
pub mod logspace;
mod tail;
mod variance;

pub use crucial::{crucial_edge_law, deletion_probability, survival_probability, CrucialEdgeLaw};
pub use expectation::{
    critical_r_hat, dense_r_hat, dense_r_hat_from_logs, log_expectation_ratio, log_expected_dominating_sets,
    predicted_interval, sparse_trend, ConcentrationPrediction, ExpectationJump, Regime, SparseTrend,
    VERY_DENSE_TOLERANCE,
};
pub use tail::talagrand_tail_product_bound;
pub use variance::{chebyshev_nonexistence_bound, log_second_moment_bound, log_variance_term};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Accepts `0 <= p < 1`; `p = 1` has no `q`.
pub(crate) fn check_open_top<F: Real>(p: F) -> Result<f64> {
    let pf = p.to_f64().unwrap_or(f64::NAN);
    if pf == 1.0 {
        return Err(Error::UndefinedQ);
    }
    if !(0.0..1.0).contains(&pf) {
        return Err(Error::ProbabilityOutOfRange { name: "p", value: pf });
    }
    Ok(pf)
}

/// Accepts `0 < p < 1`.
pub(crate) fn check_open<F: Real>(p: F) -> Result<f64> {
    let pf = check_open_top(p)?;
    if pf == 0.0 {
        return Err(Error::ProbabilityOutOfRange { name: "p", value: pf });
    }
    Ok(pf)
}
