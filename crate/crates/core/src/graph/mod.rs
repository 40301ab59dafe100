//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one 64-bit neighbor mask per vertex, so every set
//! operation the solvers need is a handful of word instructions.

mod edgelist;
mod generators;
mod graph6;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use generators::{complete, complete_bipartite, cycle, disjoint_union, edgeless, path, petersen, random_gnp};
pub use graph6::{parse_graph6, write_graph6};

use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex labels `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All labels `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest label in the set.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over the labels.
    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The `k` smallest labels of the set (all of them if fewer).
    pub fn take_smallest(self, k: usize) -> VertexSet {
        self.iter().take(k).collect()
    }

    /// Lexicographic comparison of the sorted label sequences.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A simple undirected graph with vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are rejected,
    /// duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking every representation invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let valid = VertexSet::full(n).mask();
        for (u, &row) in adj.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::InvalidArgument(format!("row {u} has bits beyond n")));
            }
            if row & (1u64 << u) != 0 {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            for v in VertexSet(row) {
                if adj[v] & (1u64 << u) == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    // Only for constructors inside the crate; keeps symmetry by construction.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// N[v] = N(v) plus v.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1u64 << v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// N(S) = union of N(x) over x in S, minus S.
    pub fn set_neighbors(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s {
            acc |= self.adj[v];
        }
        VertexSet(acc & !s.0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)).iter().map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of `G[within]`, sorted by minimum label.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach(v, left);
            out.push(comp);
            left = left.difference(comp);
        }
        out
    }

    /// Number of components of `G[within]`.
    pub fn count_components_within(&self, within: VertexSet) -> usize {
        let mut left = within;
        let mut count = 0;
        while let Some(v) = left.first() {
            left = left.difference(self.reach(v, left));
            count += 1;
        }
        count
    }

    /// Components of the whole graph, sorted by minimum label.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// c(G - S).
    pub fn components_after_removing(&self, s: VertexSet) -> usize {
        self.count_components_within(self.vertices().difference(s))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// G[S], relabelled to `0..|S|` in increasing order. The returned map sends
    /// new labels to the original ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let s = s.intersection(self.vertices());
        let map = s.to_vec();
        let mut index = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u64; map.len()];
        for (i, &v) in map.iter().enumerate() {
            for w in VertexSet(self.adj[v] & s.0) {
                adj[i] |= 1u64 << index[w];
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    /// G - S, relabelled like [`Graph::induced_subgraph`].
    pub fn remove_vertices(&self, s: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices().difference(s)).0
    }

    /// Checks symmetry, irreflexivity and that no bit at or above `n` is set.
    pub fn check_invariants(&self) -> bool {
        let valid = VertexSet::full(self.n).mask();
        self.adj.len() == self.n
            && self.adj.iter().enumerate().all(|(u, &row)| {
                row & !valid == 0
                    && row & (1u64 << u) == 0
                    && VertexSet(row).iter().all(|v| self.adj[v] & (1u64 << u) != 0)
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [3, 1, 7].iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
        assert!(s.contains(7) && !s.contains(2));
        assert_eq!(s.take_smallest(2).to_vec(), vec![1, 3]);
        let t: VertexSet = [1, 4].iter().collect();
        assert_eq!(s.lex_cmp(t), std::cmp::Ordering::Less);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn components_of_union() {
        let g = disjoint_union(&path(2).unwrap(), &path(1).unwrap()).unwrap();
        let comps: Vec<Vec<usize>> = g.components().into_iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn cycle_cut_twice() {
        let g = cycle(6).unwrap();
        let s: VertexSet = [0, 3].iter().collect();
        let rest = g.remove_vertices(s);
        let comps = rest.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(g.components_after_removing(s), 2);
    }

    #[test]
    fn bipartite_minus_side() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!(g.components_after_removing(VertexSet::full(2)), 3);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle(5).unwrap();
        let (h, map) = g.induced_subgraph([0, 1, 2].iter().collect());
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edge_count(), 2);
        assert!(h.check_invariants());
        let (h, map) = g.induced_subgraph([1, 4].iter().collect());
        assert_eq!(map, vec![1, 4]);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn set_neighbors_excludes_set() {
        let g = path(4).unwrap();
        let s: VertexSet = [1, 2].iter().collect();
        assert_eq!(g.set_neighbors(s).to_vec(), vec![0, 3]);
    }
}
