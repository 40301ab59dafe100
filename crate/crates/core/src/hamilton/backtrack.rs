//! Hamiltonian cycles by depth-first search from vertex 0.
//!
//! Neighbors are tried in label order, so the first cycle found is the
//! lexicographically smallest sequence starting at 0, which is already in
//! canonical form. Dead states `(visited, end)` are memoized.

use super::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use std::collections::HashSet;

const MEMO_LIMIT: usize = 1 << 22;

struct Search<'g> {
    g: &'g Graph,
    all: VertexSet,
    path: Vec<usize>,
    dead: HashSet<(u64, u8)>,
}

impl Search<'_> {
    fn viable(&self, visited: VertexSet, end: usize) -> bool {
        let left = self.all.difference(visited);
        if left.is_empty() {
            return self.g.has_edge(end, 0);
        }
        // 0 must still be enterable from an unvisited vertex.
        if self.g.neighbors(0).is_disjoint(left) {
            return false;
        }
        // Each unvisited vertex needs two usable neighbors.
        let usable = left.with(end).with(0);
        for w in left {
            if self.g.neighbors(w).intersection(usable).len() < 2 {
                return false;
            }
        }
        // The unvisited part must hang together off the current end.
        self.g.reach(end, left.with(end)) == left.with(end)
    }

    fn extend(&mut self, visited: VertexSet, end: usize) -> bool {
        if visited == self.all {
            return self.g.has_edge(end, 0);
        }
        if self.dead.contains(&(visited.mask(), end as u8)) || !self.viable(visited, end) {
            return false;
        }
        for w in self.g.neighbors(end).difference(visited) {
            self.path.push(w);
            if self.extend(visited.with(w), w) {
                return true;
            }
            self.path.pop();
        }
        if self.dead.len() < MEMO_LIMIT {
            self.dead.insert((visited.mask(), end as u8));
        }
        false
    }
}

/// A canonical hamiltonian cycle (the lexicographically smallest one), if any.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<OrientedCycle>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    if (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return Ok(None);
    }
    let mut s = Search { g, all: g.vertices(), path: vec![0], dead: HashSet::new() };
    if s.extend(VertexSet::singleton(0), 0) {
        Ok(Some(OrientedCycle::new(s.path)?))
    } else {
        Ok(None)
    }
}

/// Whether `g` has a hamiltonian cycle (false for n < 3).
pub fn is_hamiltonian(g: &Graph) -> bool {
    matches!(hamiltonian_cycle(g), Ok(Some(_)))
}
