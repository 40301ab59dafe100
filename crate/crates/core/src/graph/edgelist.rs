use super::Graph;
use crate::error::{Error, Result};

/// Parses `n m` followed by `m` lines `u v` (0-indexed). Blank lines and `#`
/// comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::MalformedEdgeList(msg);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| bad("missing header line".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| bad(format!("bad header {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        edges.push(parse_pair(line).ok_or_else(|| bad(format!("bad edge line {line:?}")))?);
    }
    if edges.len() != m {
        return Err(bad(format!("header promises {m} edges, found {}", edges.len())));
    }
    if let Some(extra) = lines.next() {
        return Err(bad(format!("trailing line {extra:?}")));
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::TooLarge(n) => Error::TooLarge(n),
        other => bad(other.to_string()),
    })
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
