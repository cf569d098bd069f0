//! Plain-text edge lists: a header `n m`, then `m` lines `u v`, 0-based.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, header) = loop {
        match lines.next() {
            Some((i, line)) => {
                let line = line?;
                if !line.trim().is_empty() {
                    break (i, line);
                }
            }
            None => return Err(Error::MalformedHeader { line: 1 }),
        }
    };
    let (n, m) = parse_pair(&header).ok_or(Error::MalformedHeader { line: header_line })?;
    if n == 0 {
        return Err(Error::MalformedHeader { line: header_line });
    }

    let mut seen = HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    for (i, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = parse_pair(&line).ok_or(Error::MalformedEdge { line: i })?;
        for index in [u, v] {
            if index >= n {
                return Err(Error::IndexOutOfRange { line: i, index, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoopLine { line: i, vertex: u });
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::DuplicateEdgeLine { line: i, u: e.0, v: e.1 });
        }
        pairs.push(e);
    }
    if pairs.len() != m {
        return Err(Error::EdgeCountMismatch { declared: m, found: pairs.len() });
    }
    pairs.sort_unstable();
    Ok(Graph::from_sorted_unique(n, &pairs))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Canonical form: edges with `u < v`, sorted lexicographically.
pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    writeln!(w, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
