//! (P2 ∪ kP1)-freeness.
//!
//! An induced P2 ∪ kP1 is an edge `uv` plus an independent `k`-set avoiding
//! `N[u] ∪ N[v]`, so the test reduces to one bounded independence query per edge.

use super::independence::independent_set_of_size;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;

/// An edge together with `k` vertices that, with it, induce P2 ∪ kP1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessWitness {
    pub edge: (usize, usize),
    pub isolated: VertexSet,
}

impl FreenessWitness {
    /// Re-checks the witness against `g` for the given `k`.
    pub fn validate(&self, g: &Graph, k: usize) -> std::result::Result<(), String> {
        let (u, v) = self.edge;
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(format!("{u}-{v} is not an edge"));
        }
        if self.isolated.len() != k {
            return Err(format!("{} isolated vertices, expected {k}", self.isolated.len()));
        }
        if !self.isolated.is_subset(g.vertices()) {
            return Err("isolated vertex out of range".into());
        }
        if self.isolated.contains(u) || self.isolated.contains(v) {
            return Err("edge endpoint listed as isolated".into());
        }
        if !g.is_independent(self.isolated) {
            return Err("isolated vertices are not independent".into());
        }
        if !g.neighbors(u).union(g.neighbors(v)).is_disjoint(self.isolated) {
            return Err("an isolated vertex touches the edge".into());
        }
        Ok(())
    }
}

/// `None` when `g` is (P2 ∪ kP1)-free, otherwise the witness from the first edge
/// in lexicographic order, with the lexicographically smallest independent k-set.
pub fn p2kp1_witness(g: &Graph, k: usize) -> Result<Option<FreenessWitness>> {
    if k == 0 {
        return Err(Error::InvalidArgument("freeness needs k >= 1".into()));
    }
    for (u, v) in g.edges() {
        let rest = g.vertices().difference(g.closed_neighbors(u).union(g.closed_neighbors(v)));
        if rest.len() < k {
            continue;
        }
        if let Some(isolated) = independent_set_of_size(g, rest, k) {
            return Ok(Some(FreenessWitness { edge: (u, v), isolated }));
        }
    }
    Ok(None)
}

/// Whether `g` has no induced P2 ∪ kP1.
pub fn is_p2kp1_free(g: &Graph, k: usize) -> Result<bool> {
    Ok(p2kp1_witness(g, k)?.is_none())
}

/// P2 ∪ kP1 as a graph: the edge `0-1` followed by `k` isolated vertices.
pub fn p2kp1_pattern(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 2, &[(0, 1)])
}
