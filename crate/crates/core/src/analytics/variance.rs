use super::logspace::{ln_binomial, ln_expm1, ln_miss, log1mexp, log_sum_exp, scaled};
use super::{check_open, check_open_top, log_expected_dominating_sets};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `ln f(s)` with
/// `f(s) = C(r,s) C(n-r, r-s) (1 - 2(1-p)^r + (1-p)^{2r-s})^{n-2r+s}`,
/// the contribution of pairs of `r`-sets meeting in `s` vertices.
pub fn log_variance_term<F: Real>(n: usize, p: F, r: usize, s: usize) -> Result<F> {
    check_open_top(p)?;
    if 2 * r > n {
        return Err(Error::VarianceDomain { r, n });
    }
    if s > r {
        return Err(Error::IntersectionOutOfRange { s, r });
    }
    // 1 - 2a + a^2 (1-p)^{-s} = (1-a)^2 + a^2 ((1-p)^{-s} - 1),  a = (1-p)^r
    let ln_a = ln_miss(p, r);
    let both_miss = F::lit(2.0) * log1mexp(ln_a);
    let overlap = F::lit(2.0) * ln_a + ln_expm1(-ln_miss(p, s));
    let ln_base = log_sum_exp(&[both_miss, overlap]);
    Ok(ln_binomial::<F>(r, s) + ln_binomial::<F>(n - r, r - s) + scaled(n - 2 * r + s, ln_base))
}

/// `ln(C(n,r) Σ_s f(s))`, an upper bound on `ln E(X_r²)`.
pub fn log_second_moment_bound<F: Real>(n: usize, p: F, r: usize) -> Result<F> {
    let terms = (0..=r).map(|s| log_variance_term(n, p, r, s)).collect::<Result<Vec<F>>>()?;
    Ok(ln_binomial::<F>(n, r) + log_sum_exp(&terms))
}

/// Chebyshev bound `P(X_r = 0) <= V(X_r) / E(X_r)²`, clamped to `[0, 1]`,
/// with the variance bounded through the second-moment terms.
pub fn chebyshev_nonexistence_bound<F: Real>(n: usize, p: F, r: usize) -> Result<F> {
    check_open(p)?;
    if r == 0 || 2 * r > n {
        return Err(Error::VarianceDomain { r, n });
    }
    let ln_e = log_expected_dominating_sets(n, p, r)?;
    if ln_e == F::neg_infinity() {
        return Err(Error::ZeroExpectation { r });
    }
    let ratio = (log_second_moment_bound(n, p, r)? - F::lit(2.0) * ln_e).exp_m1();
    Ok(ratio.max(F::zero()).min(F::one()))
}
