//! Numerically stable building blocks.

use crate::scalar::Real;

/// `ln C(n, k)` as a sum of `ln((n-i)/(i+1))`, using the shorter side.
pub fn ln_binomial<F: Real>(n: usize, k: usize) -> F {
    if k > n {
        return F::neg_infinity();
    }
    let k = k.min(n - k);
    (0..k).fold(F::zero(), |acc, i| acc + (F::from_count(n - i) / F::from_count(i + 1)).ln())
}

/// `ln(1 - e^a)` for `a <= 0`.
pub fn log1mexp<F: Real>(a: F) -> F {
    if a > -F::lit(std::f64::consts::LN_2) {
        (-a.exp_m1()).ln()
    } else {
        (-a.exp()).ln_1p()
    }
}

/// `ln(e^x - 1)` for `x >= 0`.
pub fn ln_expm1<F: Real>(x: F) -> F {
    if x > F::lit(40.0) {
        x + (-(-x).exp()).ln_1p()
    } else {
        x.exp_m1().ln()
    }
}

/// `r ln(1-p)`, the log of the probability that a fixed outside vertex has
/// no neighbour in a fixed `r`-set.
pub fn ln_miss<F: Real>(p: F, r: usize) -> F {
    if r == 0 {
        F::zero()
    } else {
        F::from_count(r) * (-p).ln_1p()
    }
}

/// `ln Σ e^{x_i}`; `-inf` for an empty or all `-inf` input.
pub fn log_sum_exp<F: Real>(xs: &[F]) -> F {
    let m = xs.iter().copied().fold(F::neg_infinity(), F::max);
    if m == F::neg_infinity() {
        return m;
    }
    if m == F::infinity() {
        return m;
    }
    m + xs.iter().map(|&x| (x - m).exp()).fold(F::zero(), |a, b| a + b).ln()
}

/// `k * x` with the convention `0 * (-inf) = 0` (empty products).
pub(crate) fn scaled<F: Real>(k: usize, x: F) -> F {
    if k == 0 {
        F::zero()
    } else {
        F::from_count(k) * x
    }
}
