use std::time::Instant;

use super::{SolveResult, SolveStatus};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const BRUTE_FORCE_LIMIT: usize = 25;

/// Domination number by enumerating subsets in order of increasing size.
///
/// Within a size, subsets are visited in lexicographic order, so the witness
/// is the lexicographically first minimum dominating set.
pub fn brute_force_domination_number(g: &Graph) -> Result<SolveResult> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForBruteForce { n, limit: BRUTE_FORCE_LIMIT });
    }
    let start = Instant::now();
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect();
    let full: u32 = if n == 32 { !0 } else { (1u32 << n) - 1 };

    let mut visited = 0u64;
    let mut chosen = Vec::new();
    for k in 0..=n {
        if search(&closed, full, k, 0, 0, &mut chosen, &mut visited) {
            let witness = VertexSet::from_indices(n, chosen.iter().copied())?;
            return Ok(SolveResult {
                status: SolveStatus::Exact,
                size: k,
                witness,
                nodes_explored: visited,
                elapsed: start.elapsed(),
            });
        }
    }
    unreachable!("the full vertex set dominates")
}

fn search(closed: &[u32], full: u32, k: usize, from: usize, covered: u32, chosen: &mut Vec<usize>, visited: &mut u64) -> bool {
    if k == 0 {
        *visited += 1;
        return covered == full;
    }
    for v in from..closed.len() {
        if closed.len() - v < k {
            break;
        }
        chosen.push(v);
        if search(closed, full, k - 1, v + 1, covered | closed[v], chosen, visited) {
            return true;
        }
        chosen.pop();
    }
    false
}
