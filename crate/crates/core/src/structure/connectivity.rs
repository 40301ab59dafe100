//! Vertex connectivity by Menger's theorem: unit-capacity max-flow on the
//! vertex-split digraph, one flow per candidate non-adjacent pair.

use crate::graph::{Graph, VertexSet};

/// Residual network of the split digraph. Vertex `v` becomes `v_in = 2v` and
/// `v_out = 2v + 1` joined by an arc of capacity 1; each edge `uv` becomes the
/// arcs `u_out -> v_in` and `v_out -> u_in` with unbounded capacity.
struct SplitNetwork<'g> {
    g: &'g Graph,
    // Flow through the internal arc of each vertex.
    through: u64,
    // flow[u] has bit v set iff one unit travels along u_out -> v_in.
    flow: Vec<u64>,
}

impl<'g> SplitNetwork<'g> {
    fn new(g: &'g Graph) -> Self {
        SplitNetwork { g, through: 0, flow: vec![0; g.n()] }
    }

    /// Breadth-first search for an augmenting path from `s_out` to `t_in`.
    /// Returns the in/out reachability masks and the parent links.
    fn search(&self, s: usize, t: usize) -> (u64, u64, Option<Vec<Step>>) {
        let n = self.g.n();
        let mut parent = vec![Step::None; 2 * n];
        let mut seen_in = 0u64;
        let mut seen_out = 1u64 << s;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(Node::Out(s));
        while let Some(node) = queue.pop_front() {
            match node {
                Node::Out(u) => {
                    // forward along edges u_out -> v_in (unbounded, always residual)
                    for v in self.g.neighbors(u) {
                        if seen_in & (1 << v) == 0 {
                            seen_in |= 1 << v;
                            parent[2 * v] = Step::FromOut(u);
                            if v == t {
                                return (seen_in, seen_out, Some(parent));
                            }
                            queue.push_back(Node::In(v));
                        }
                    }
                    // backward along a used internal arc u_in -> u_out
                    if u != s && self.through & (1 << u) != 0 && seen_in & (1 << u) == 0 {
                        seen_in |= 1 << u;
                        parent[2 * u] = Step::Back(u);
                        queue.push_back(Node::In(u));
                    }
                }
                Node::In(v) => {
                    // forward through the unused internal arc
                    if self.through & (1 << v) == 0 && seen_out & (1 << v) == 0 {
                        seen_out |= 1 << v;
                        parent[2 * v + 1] = Step::Through(v);
                        queue.push_back(Node::Out(v));
                    }
                    // backward along flow-carrying edges u_out -> v_in
                    for u in VertexSet::from_mask(self.g.neighbors(v).mask()) {
                        if self.flow[u] & (1 << v) != 0 && seen_out & (1 << u) == 0 {
                            seen_out |= 1 << u;
                            parent[2 * u + 1] = Step::Cancel(v);
                            queue.push_back(Node::Out(u));
                        }
                    }
                }
            }
        }
        (seen_in, seen_out, None)
    }

    fn augment(&mut self, t: usize, parent: &[Step]) {
        let mut node = Node::In(t);
        loop {
            match node {
                Node::In(v) => match parent[2 * v] {
                    Step::FromOut(u) => {
                        if self.flow[v] & (1 << u) != 0 {
                            // opposite unit on the same undirected edge cancels
                            self.flow[v] &= !(1 << u);
                        } else {
                            self.flow[u] |= 1 << v;
                        }
                        node = Node::Out(u);
                    }
                    Step::Back(u) => {
                        self.through &= !(1 << u);
                        node = Node::Out(u);
                    }
                    _ => unreachable!("in-node reached by a non-in step"),
                },
                Node::Out(u) => match parent[2 * u + 1] {
                    Step::None => return,
                    Step::Through(v) => {
                        self.through |= 1 << v;
                        node = Node::In(v);
                    }
                    Step::Cancel(v) => {
                        self.flow[u] &= !(1 << v);
                        node = Node::In(v);
                    }
                    _ => unreachable!("out-node reached by a non-out step"),
                },
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Node {
    In(usize),
    Out(usize),
}

#[derive(Clone, Copy, Debug)]
enum Step {
    None,
    FromOut(usize),
    Back(usize),
    Through(usize),
    Cancel(usize),
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for non-adjacent
/// `s != t`, stopping early once `limit` is reached. When the full value is below
/// `limit`, also returns a minimum `s`-`t` separator.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> (usize, Option<VertexSet>) {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    let mut value = 0;
    loop {
        if value >= limit {
            return (value, None);
        }
        let (seen_in, seen_out, parent) = net.search(s, t);
        match parent {
            Some(p) => {
                net.augment(t, &p);
                value += 1;
            }
            None => {
                // saturated internal arcs crossing the cut
                let cut = VertexSet::from_mask(seen_in & !seen_out & !(1 << s));
                debug_assert_eq!(cut.len(), value);
                return (value, Some(cut));
            }
        }
    }
}

/// κ(G) together with a minimum separator (absent for complete graphs and n <= 1).
pub fn connectivity_with_separator(g: &Graph) -> (usize, Option<VertexSet>) {
    let n = g.n();
    if n <= 1 {
        return (0, None);
    }
    if g.is_complete() {
        return (n - 1, None);
    }
    let comps = g.components();
    if comps.len() > 1 {
        return (0, Some(VertexSet::EMPTY));
    }
    // Some minimum separator misses one of the first κ + 1 labels, so sources
    // beyond the current bound cannot improve it.
    let mut best = usize::MAX;
    let mut best_cut = None;
    let mut source = 0;
    while source < n && source <= best {
        let non_adjacent = g.vertices().difference(g.closed_neighbors(source));
        for target in non_adjacent {
            let (value, cut) = local_connectivity(g, source, target, best);
            if value < best {
                best = value;
                best_cut = cut;
            }
        }
        source += 1;
    }
    (best, best_cut)
}

/// Minimum number of vertices whose removal disconnects `g` or leaves fewer
/// than two vertices.
pub fn vertex_connectivity(g: &Graph) -> usize {
    connectivity_with_separator(g).0
}

/// A minimum vertex separator: `G - S` is disconnected and `|S| = κ(G)`.
/// Absent for complete graphs.
pub fn min_separator(g: &Graph) -> Option<VertexSet> {
    connectivity_with_separator(g).1
}

/// Whether κ(G) >= k without computing κ exactly.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    if g.is_complete() {
        return n > k;
    }
    if (0..n).any(|v| g.degree(v) < k) {
        return false;
    }
    for source in 0..=k.min(n - 1) {
        for target in g.vertices().difference(g.closed_neighbors(source)) {
            if local_connectivity(g, source, target, k).0 < k {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::oracle;

    #[test]
    fn named_values() {
        assert_eq!(vertex_connectivity(&complete_bipartite(4, 5).unwrap()), 4);
        assert_eq!(vertex_connectivity(&cycle(6).unwrap()), 2);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&complete(6).unwrap()), 5);
        assert_eq!(vertex_connectivity(&path(5).unwrap()), 1);
        assert_eq!(vertex_connectivity(&edgeless(3).unwrap()), 0);
        assert_eq!(vertex_connectivity(&complete(1).unwrap()), 0);
    }

    #[test]
    fn separator_disconnects() {
        for g in [petersen(), cycle(7).unwrap(), complete_bipartite(3, 5).unwrap()] {
            let (k, s) = connectivity_with_separator(&g);
            let s = s.unwrap();
            assert_eq!(s.len(), k);
            assert!(g.components_after_removing(s) >= 2);
        }
        assert_eq!(min_separator(&complete(4).unwrap()), None);
    }

    #[test]
    fn matches_oracle_on_random_graphs() {
        for seed in 0..200 {
            let n = 3 + (seed as usize % 8);
            let p = crate::Rational::new(1 + (seed as i64 % 4), 5);
            let g = random_gnp(n, p, seed).unwrap();
            let k = vertex_connectivity(&g);
            assert_eq!(k, oracle::vertex_connectivity(&g), "{g:?}");
            for j in 0..=k + 1 {
                assert_eq!(is_k_connected(&g, j), j <= k, "{g:?} k={j}");
            }
        }
    }
}
