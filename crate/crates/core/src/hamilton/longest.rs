use super::cycle::OrientedCycle;
use super::dp::longest_cycle_lengths;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use std::collections::HashSet;

pub const DEFAULT_LONGEST_CYCLE_CAP: usize = 18;

/// A maximum-length cycle; among those, the lexicographically smallest
/// canonical sequence. `None` for acyclic graphs.
pub fn longest_cycle_with_cap(g: &Graph, cap: usize) -> Result<Option<OrientedCycle>> {
    let best = longest_cycle_lengths(g, cap)?;
    let Some(&target) = best.iter().max().filter(|&&l| l >= 3) else {
        return Ok(None);
    };
    // Smallest start carrying a cycle of the target length; the search below
    // is then guaranteed to succeed.
    let start = best.iter().position(|&l| l == target).expect("max exists");
    let mut s = Search {
        g,
        start,
        target,
        allowed: VertexSet::from_mask(!((1u64 << start) - 1)).intersection(g.vertices()),
        path: vec![start],
        dead: HashSet::new(),
    };
    let found = s.extend(VertexSet::singleton(start), start);
    assert!(found, "subset DP promised a cycle of length {target} through {start}");
    // The lexicographically first sequence beats its own reflection, so it is canonical.
    Ok(Some(OrientedCycle::new(s.path)?))
}

pub fn longest_cycle(g: &Graph) -> Result<Option<OrientedCycle>> {
    longest_cycle_with_cap(g, DEFAULT_LONGEST_CYCLE_CAP)
}

struct Search<'g> {
    g: &'g Graph,
    start: usize,
    target: usize,
    allowed: VertexSet,
    path: Vec<usize>,
    dead: HashSet<(u64, u8)>,
}

impl Search<'_> {
    fn extend(&mut self, visited: VertexSet, end: usize) -> bool {
        if visited.len() == self.target {
            return self.g.has_edge(end, self.start);
        }
        if self.dead.contains(&(visited.mask(), end as u8)) {
            return false;
        }
        for w in self.g.neighbors(end).intersection(self.allowed).difference(visited) {
            self.path.push(w);
            if self.extend(visited.with(w), w) {
                return true;
            }
            self.path.pop();
        }
        self.dead.insert((visited.mask(), end as u8));
        false
    }
}
