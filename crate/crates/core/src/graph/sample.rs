use rand::distributions::{Bernoulli, Distribution};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{check_probability, Error, Result};
use crate::rng::rng_from_seed;
use crate::scalar::Real;

/// Below this edge probability sampling skips over absent pairs geometrically.
pub const SPARSE_THRESHOLD: f64 = 0.1;

/// `(n, p)` for `G(n,p)` together with the derived `q = 1/(1-p)` and `d = np`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GnpParams<F = f64> {
    pub n: usize,
    pub p: F,
}

impl<F: Real> GnpParams<F> {
    pub fn new(n: usize, p: F) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let pf = p.to_f64().unwrap_or(f64::NAN);
        check_probability("p", pf)?;
        Ok(GnpParams { n, p })
    }

    /// `1/(1-p)`; `None` at `p = 1`.
    pub fn q(&self) -> Option<F> {
        (self.p < F::one()).then(|| F::one() / (F::one() - self.p))
    }

    /// `ln q = -ln(1-p)`, computed without forming `1-p`.
    pub fn ln_q(&self) -> Option<F> {
        (self.p < F::one()).then(|| -(-self.p).ln_1p())
    }

    pub fn d(&self) -> F {
        F::from_count(self.n) * self.p
    }

    pub fn sample_path(&self) -> SamplePath {
        SamplePath::for_probability(self.p.to_f64().unwrap())
    }
}

/// Which sampling algorithm produced a graph. Part of the reproducibility
/// contract: the two paths give different graphs for the same seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplePath {
    /// One Bernoulli draw per unordered pair.
    Bernoulli,
    /// Geometric jumps between present pairs.
    GeometricSkip,
}

impl SamplePath {
    pub fn for_probability(p: f64) -> Self {
        if p < SPARSE_THRESHOLD {
            SamplePath::GeometricSkip
        } else {
            SamplePath::Bernoulli
        }
    }
}

/// Draws `G(n,p)` deterministically from `seed`.
pub fn sample_gnp<F: Real>(params: &GnpParams<F>, seed: u64) -> Result<Graph> {
    let n = params.n;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = params.p.to_f64().unwrap_or(f64::NAN);
    check_probability("p", p)?;
    let mut rng = rng_from_seed(seed);
    let pairs = match params.sample_path() {
        SamplePath::Bernoulli => {
            let coin = Bernoulli::new(p).expect("checked range");
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if coin.sample(&mut rng) {
                        pairs.push((u, v));
                    }
                }
            }
            pairs
        }
        SamplePath::GeometricSkip => skip_sample(n, p, &mut rng),
    };
    Ok(Graph::from_sorted_unique(n, &pairs))
}

fn skip_sample<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    if p == 0.0 || n < 2 {
        return pairs;
    }
    let total = (n as u64) * (n as u64 - 1) / 2;
    let log_q = (-p).ln_1p();
    // linear pair index k, walking rows u with row_start = index of (u, u+1)
    let mut k: u64 = 0;
    let mut first = true;
    let mut u = 0usize;
    let mut row_start: u64 = 0;
    loop {
        let uniform = 1.0 - rng.gen::<f64>();
        let skip = (uniform.ln() / log_q).floor();
        let step = if first { skip } else { skip + 1.0 };
        first = false;
        if !(step < (total - k) as f64) {
            break;
        }
        k += step as u64;
        if k >= total {
            break;
        }
        while k >= row_start + (n - 1 - u) as u64 {
            row_start += (n - 1 - u) as u64;
            u += 1;
        }
        pairs.push((u, u + 1 + (k - row_start) as usize));
    }
    pairs
}

/// Removes each edge of `g` independently with probability `p_del`.
pub fn delete_edges(g: &Graph, p_del: f64, seed: u64) -> Result<Graph> {
    check_probability("p_del", p_del)?;
    let coin = Bernoulli::new(p_del).expect("checked range");
    let mut rng = rng_from_seed(seed);
    let kept: Vec<_> = g.edges().filter(|_| !coin.sample(&mut rng)).collect();
    Ok(Graph::from_sorted_unique(g.n(), &kept))
}
