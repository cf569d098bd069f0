use num_traits::pow;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Law of `|C_G(S)|` given that a fixed `r`-set `S` dominates:
/// `Binomial(n - r, p*)` with mean `μ = (n - r) p*`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrucialEdgeLaw<T> {
    pub trials: usize,
    pub p_star: T,
    pub mu: T,
}

/// `p* = P(b_v = 1) / P(b_v ≠ 0) = r p (1-p)^{r-1} / (1 - (1-p)^r)` where
/// `b_v ~ Binomial(r, p)` counts the edges from an outside vertex `v` into `S`.
///
/// Exact for rational scalars. The denominator is evaluated as
/// `p Σ_{j<r} (1-p)^j`, which avoids cancellation for small `p`.
pub fn crucial_edge_law<T: Scalar>(n: usize, p: T, r: usize) -> Result<CrucialEdgeLaw<T>> {
    if !(p > T::zero() && p < T::one()) {
        return Err(Error::ProbabilityOutOfRange { name: "p", value: p.to_f64().unwrap_or(f64::NAN) });
    }
    if r == 0 || r > n {
        return Err(Error::CrucialSize { r, n });
    }
    let miss = T::one() - p;
    let mut geometric = T::zero();
    let mut power = T::one();
    for _ in 0..r {
        geometric = geometric + power.clone();
        power = power * miss.clone();
    }
    let p_star = T::from_count(r) * pow(miss, r - 1) / geometric;
    let mu = T::from_count(n - r) * p_star.clone();
    Ok(CrucialEdgeLaw { trials: n - r, p_star, mu })
}

/// `P(no crucial edge deleted | |C_G(S)| = ℓ) = (1 - p_del)^ℓ`.
pub fn survival_probability<T: Scalar>(c_size: usize, p_del: T) -> T {
    pow(T::one() - p_del, c_size)
}

/// Edge deletion probability `p'' = x / (n √p)` of the two-stage procedure.
pub fn deletion_probability<F: Real>(n: usize, p: F, x: F) -> Result<F> {
    let p_del = x / (F::from_count(n) * p.sqrt());
    let v = p_del.to_f64().unwrap_or(f64::NAN);
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::ProbabilityOutOfRange { name: "p''", value: v });
    }
    Ok(p_del)
}

impl<T: Real> CrucialEdgeLaw<T> {
    /// `P(|C| = k)` under the conditional binomial law.
    pub fn pmf(&self, k: usize) -> T {
        if k > self.trials {
            return T::zero();
        }
        let ln_c = super::logspace::ln_binomial::<T>(self.trials, k);
        let ln = ln_c
            + super::logspace::scaled(k, self.p_star.ln())
            + super::logspace::scaled(self.trials - k, (-self.p_star).ln_1p());
        ln.exp()
    }

    pub fn variance(&self) -> T {
        self.mu * (T::one() - self.p_star)
    }
}
