//! Domination number laboratory for Erdős–Rényi random graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bit-set vertex sets, `G(n,p)` sampling, edge deletion,
//!   domination checks and crucial vertices, plus the edge-list format.
//! - [`solver`]: exact branch-and-bound, brute force, greedy and
//!   alteration dominating sets.
//! - [`analytics`]: log-space evaluation of expected dominating-set counts,
//!   the critical size `r̂`, second-moment terms and tail bounds.
//! - [`experiments`]: seeded, schedule-independent Monte Carlo harnesses.
//!
//! The closed-form analytics are generic over the scalar type. Floating
//! point quantities need [`Real`]; formulas that only use field arithmetic
//! (the crucial-edge law, survival probabilities) accept any [`Scalar`],
//! including exact rationals.

pub mod analytics;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod rng;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use experiments::{run_experiment, ExperimentConfig, ExperimentKind, ExperimentReport};
pub use graph::{Graph, GnpParams, SamplePath, VertexSet};
pub use scalar::{Real, Scalar};
pub use solver::{SolveResult, SolveStatus};

/// Exact rational scalar, used where a formula is checked without rounding.
pub type Rational = num_rational::Ratio<i128>;

/// Double-precision instantiations.
pub type Prediction = analytics::ConcentrationPrediction<f64>;
pub type CrucialLaw = analytics::CrucialEdgeLaw<f64>;
pub type ExpectationJump = analytics::ExpectationJump<f64>;
pub type Params = GnpParams<f64>;

/// Single-precision instantiations.
pub type Prediction32 = analytics::ConcentrationPrediction<f32>;
pub type Params32 = GnpParams<f32>;

/// Exact instantiation of the crucial-edge law.
pub type ExactCrucialLaw = analytics::CrucialEdgeLaw<Rational>;

/// Version string written into every experiment report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
