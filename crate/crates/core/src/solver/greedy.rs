use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, VertexSet};

/// Standard greedy cover: repeatedly take the vertex whose closed
/// neighbourhood contains the most uncovered vertices, lowest index on ties.
///
/// Gains only decrease, so a lazily updated max-heap returns the same
/// sequence as a full rescan.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut covered = vec![false; n];
    let mut remaining = n;
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        (0..n).map(|v| (g.degree(v) + 1, Reverse(v))).collect();
    let mut out = VertexSet::empty(n);

    let gain = |v: usize, covered: &[bool]| {
        usize::from(!covered[v]) + g.neighbors(v).iter().filter(|&&u| !covered[u as usize]).count()
    };

    while remaining > 0 {
        let (stale, Reverse(v)) = heap.pop().expect("uncovered vertices remain");
        let fresh = gain(v, &covered);
        if fresh < stale {
            heap.push((fresh, Reverse(v)));
            continue;
        }
        out.insert(v);
        for u in std::iter::once(v).chain(g.neighbors(v).iter().map(|&u| u as usize)) {
            if !covered[u] {
                covered[u] = true;
                remaining -= 1;
            }
        }
    }
    out
}
