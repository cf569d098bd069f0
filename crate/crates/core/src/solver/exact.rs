//! Branch-and-bound over the set-cover view of domination.
//!
//! Each vertex must be covered by some closed neighbourhood `N[u]`. At every
//! node the solver picks the uncovered vertex with the fewest admissible
//! dominators and branches on them, best coverage first. Sibling branches
//! exclude the dominators already tried, so every dominating set is reached
//! at most once.

use std::time::{Duration, Instant};

use super::{greedy_dominating_set, SolveResult, SolveStatus};
use crate::graph::{Graph, VertexSet};

const CLOCK_STRIDE: u64 = 1024;

/// Computes `D(G)` within `time_budget`.
///
/// With `size_cap = Some(k)` the search only looks for dominating sets of
/// size at most `k` and stops at the first one, answering `D(G) <= k`; see
/// [`SolveResult::within_cap`].
pub fn domination_number_exact(g: &Graph, time_budget: Duration, size_cap: Option<usize>) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    let incumbent = greedy_dominating_set(g);

    if let Some(k) = size_cap {
        if incumbent.len() <= k {
            return SolveResult {
                status: SolveStatus::UpperBoundOnly,
                size: incumbent.len(),
                witness: incumbent,
                nodes_explored: 0,
                elapsed: start.elapsed(),
            };
        }
    }

    let mut search = Search::new(g, incumbent.len(), start.checked_add(time_budget));
    if let Some(k) = size_cap {
        search.best_size = k + 1;
        search.stop_below = Some(k + 1);
    }
    let covered = vec![0u64; search.w];
    search.descend(&covered);

    let improved = search.best_set.is_some();
    let witness = match search.best_set.take() {
        Some(set) => VertexSet::from_indices(n, set).expect("solver vertices in range"),
        None => incumbent,
    };
    let size = witness.len();
    let status = if search.timed_out {
        SolveStatus::Timeout
    } else {
        match size_cap {
            None => SolveStatus::Exact,
            // the search refuted every set of size <= k
            Some(k) if !improved && size == k + 1 => SolveStatus::Exact,
            Some(_) => SolveStatus::UpperBoundOnly,
        }
    };
    SolveResult { status, size, witness, nodes_explored: search.nodes, elapsed: start.elapsed() }
}

struct Search {
    n: usize,
    w: usize,
    /// `N[v]` rows, `w` words each.
    closed: Vec<u64>,
    full: Vec<u64>,
    excluded: Vec<u64>,
    chosen: Vec<usize>,
    best_size: usize,
    best_set: Option<Vec<usize>>,
    stop_below: Option<usize>,
    done: bool,
    deadline: Option<Instant>,
    timed_out: bool,
    nodes: u64,
}

impl Search {
    fn new(g: &Graph, best_size: usize, deadline: Option<Instant>) -> Self {
        let n = g.n();
        let w = n.div_ceil(64);
        let mut closed = vec![0u64; n * w];
        for v in 0..n {
            let row = &mut closed[v * w..(v + 1) * w];
            row[v / 64] |= 1 << (v % 64);
            for &u in g.neighbors(v) {
                let u = u as usize;
                row[u / 64] |= 1 << (u % 64);
            }
        }
        let full = VertexSet::full(n).words().to_vec();
        Search {
            n,
            w,
            closed,
            full,
            excluded: vec![0; w],
            chosen: Vec::new(),
            best_size,
            best_set: None,
            stop_below: None,
            done: false,
            deadline,
            timed_out: false,
            nodes: 0,
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.closed[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    fn is_excluded(&self, v: usize) -> bool {
        self.excluded[v / 64] >> (v % 64) & 1 == 1
    }

    fn gain(&self, v: usize, uncovered: &[u64]) -> usize {
        self.row(v).iter().zip(uncovered).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn admissible_dominators(&self, v: usize) -> usize {
        self.row(v).iter().zip(&self.excluded).map(|(a, x)| (a & !x).count_ones() as usize).sum()
    }

    fn descend(&mut self, covered: &[u64]) {
        self.nodes += 1;
        if self.nodes % CLOCK_STRIDE == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                    self.done = true;
                }
            }
        }
        if self.done {
            return;
        }

        let uncovered: Vec<u64> = self.full.iter().zip(covered).map(|(f, c)| f & !c).collect();
        let missing: usize = uncovered.iter().map(|w| w.count_ones() as usize).sum();
        let depth = self.chosen.len();
        if missing == 0 {
            // pruning guarantees depth < best_size here
            self.best_size = depth;
            self.best_set = Some(self.chosen.clone());
            if self.stop_below.is_some_and(|limit| depth < limit) {
                self.done = true;
            }
            return;
        }
        if depth + 1 >= self.best_size {
            return;
        }
        let budget = self.best_size - depth - 1;

        // lower bound: ceil(missing / largest admissible coverage)
        let mut max_gain = 0;
        for v in 0..self.n {
            if !self.is_excluded(v) {
                max_gain = max_gain.max(self.gain(v, &uncovered));
            }
        }
        if max_gain == 0 || missing.div_ceil(max_gain) > budget {
            return;
        }

        // branch on the uncovered vertex with fewest admissible dominators
        let mut pivot = usize::MAX;
        let mut fewest = usize::MAX;
        for v in VertexSet::from_words(self.n, uncovered.clone()).iter() {
            let k = self.admissible_dominators(v);
            if k < fewest {
                fewest = k;
                pivot = v;
                if k <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return;
        }

        let mut candidates: Vec<(usize, usize)> = VertexSet::from_words(self.n, self.row(pivot).to_vec())
            .iter()
            .filter(|&u| !self.is_excluded(u))
            .map(|u| (self.gain(u, &uncovered), u))
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut next = vec![0u64; self.w];
        for &(_, u) in &candidates {
            for ((o, c), r) in next.iter_mut().zip(covered).zip(self.row(u)) {
                *o = c | r;
            }
            self.chosen.push(u);
            self.descend(&next);
            self.chosen.pop();
            self.excluded[u / 64] |= 1 << (u % 64);
            if self.done {
                break;
            }
        }
        for &(_, u) in &candidates {
            self.excluded[u / 64] &= !(1 << (u % 64));
        }
    }
}
