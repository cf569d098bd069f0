use crate::error::{Error, Result};
use crate::scalar::Real;

/// Bound on `P(D <= b) · P(D >= b + t)`, namely `exp(-t² / (4(n - b)))`.
///
/// `n - D` is 1-Lipschitz and certifiable by `n - D` vertex choices, which is
/// where the `4(n - b)` comes from.
pub fn talagrand_tail_product_bound<F: Real>(n: usize, b: F, t: F) -> Result<F> {
    let nf = F::from_count(n);
    if !(b < nf) {
        return Err(Error::CertificateSize { b: b.to_f64().unwrap_or(f64::NAN), n });
    }
    if !(t >= F::zero()) {
        return Err(Error::NegativeDeviation(t.to_f64().unwrap_or(f64::NAN)));
    }
    Ok((-(t * t) / (F::lit(4.0) * (nf - b))).exp())
}
