use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `{0, …, r-1}` plus every vertex it leaves undominated.
pub fn alteration_dominating_set(g: &Graph, r: usize) -> Result<VertexSet> {
    let n = g.n();
    if r > n {
        return Err(Error::PrefixOutOfRange { r, n });
    }
    let base = VertexSet::prefix(n, r);
    let covered = g.dominated_by(&base)?;
    let mut out = base;
    for v in (0..n).filter(|&v| !covered.contains(v)) {
        out.insert(v);
    }
    Ok(out)
}
