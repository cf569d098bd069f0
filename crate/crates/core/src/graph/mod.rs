//! Simple undirected graphs on `0..n`, random sampling and domination checks.

mod edge_list;
mod sample;
mod vertex_set;

pub use edge_list::{read_edge_list, write_edge_list};
pub use sample::{delete_edges, sample_gnp, GnpParams, SamplePath, SPARSE_THRESHOLD};
pub use vertex_set::{Iter as VertexIter, VertexSet};

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency rows.
///
/// Rows are stored contiguously (`offsets[v]..offsets[v+1]` into `targets`),
/// each sorted ascending. Construction checks symmetry and loop-freeness.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, &pairs))
    }

    /// `pairs` must be sorted, deduplicated, with `u < v < n`.
    pub(crate) fn from_sorted_unique(n: usize, pairs: &[(usize, usize)]) -> Self {
        assert!(n <= u32::MAX as usize);
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0u32; offsets[n]];
        // (u, v) sorted by u then v: row u receives its upper neighbours in order,
        // and row v receives lower neighbours u in increasing u.
        for &(u, v) in pairs {
            targets[fill[u]] = v as u32;
            fill[u] += 1;
            targets[fill[v]] = u as u32;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph { n, offsets, targets }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, offsets: vec![0; n + 1], targets: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted_unique(n, &pairs)
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_unique(n, &pairs)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let pairs: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_sorted_unique(leaves + 1, &pairs)
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).iter().map(|&v| v as usize).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Copy of the graph with one more edge. Fails if it already exists.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    /// Copy of the graph without edge `{u, v}` (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        let pairs: Vec<_> = self.edges().filter(|&e| e != (a, b)).collect();
        Self::from_sorted_unique(self.n, &pairs)
    }

    /// Closed neighbourhood `N[v]` as a bit row.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        s.insert(v);
        for &u in self.neighbors(v) {
            s.insert(u as usize);
        }
        s
    }

    fn check_universe(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch { set: s.universe(), graph: self.n });
        }
        Ok(())
    }

    /// Vertices in `s` or adjacent to a member of `s`.
    pub fn dominated_by(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_universe(s)?;
        let mut covered = s.clone();
        for v in s.iter() {
            for &u in self.neighbors(v) {
                covered.insert(u as usize);
            }
        }
        Ok(covered)
    }

    /// Whether every vertex is in `s` or has a neighbour in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> Result<bool> {
        self.check_universe(s)?;
        Ok((0..self.n).all(|v| s.contains(v) || self.neighbors(v).iter().any(|&u| s.contains(u as usize))))
    }

    /// `C_G(S)`: vertices outside `s` with exactly one neighbour in `s`.
    ///
    /// Each such vertex owns exactly one crucial edge, so the cardinality is the
    /// number of crucial edges of `s`.
    pub fn crucial_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_universe(s)?;
        let mut out = VertexSet::empty(self.n);
        for v in (0..self.n).filter(|&v| !s.contains(v)) {
            let mut hits = self.neighbors(v).iter().filter(|&&u| s.contains(u as usize));
            if hits.next().is_some() && hits.next().is_none() {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// The crucial edges of `s` as `(outside vertex, its unique neighbour in s)`.
    pub fn crucial_edges(&self, s: &VertexSet) -> Result<Vec<(usize, usize)>> {
        let c = self.crucial_set(s)?;
        Ok(c.iter()
            .map(|x| {
                let y = self.neighbors(x).iter().find(|&&u| s.contains(u as usize)).unwrap();
                (x, *y as usize)
            })
            .collect())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
