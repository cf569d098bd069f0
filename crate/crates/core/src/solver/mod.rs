//! Dominating-set solvers.

mod alteration;
mod brute;
mod exact;
mod greedy;

pub use alteration::alteration_dominating_set;
pub use brute::{brute_force_domination_number, BRUTE_FORCE_LIMIT};
pub use exact::domination_number_exact;
pub use greedy::greedy_dominating_set;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// `size` is the domination number.
    Exact,
    /// `size` is the size of a dominating set; optimality not proven.
    UpperBoundOnly,
    /// Budget ran out; `size` is the best incumbent.
    Timeout,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Exact => "exact",
            SolveStatus::UpperBoundOnly => "upper_bound_only",
            SolveStatus::Timeout => "timeout",
        }
    }
}

/// Output of every solver. `witness` is always dominating.
///
/// `elapsed` is wall-clock time and is left out of the serialized form so
/// that JSON output stays reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub size: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveResult {
    /// Answer of the decision query `D(G) <= k` issued with a size cap.
    ///
    /// `None` when the search timed out before settling the question.
    pub fn within_cap(&self, k: usize) -> Option<bool> {
        if self.size <= k {
            Some(true)
        } else if self.status == SolveStatus::Timeout {
            None
        } else {
            Some(false)
        }
    }
}
