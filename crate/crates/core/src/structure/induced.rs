//! Generic induced-subgraph search by backtracking.

use crate::graph::{Graph, VertexSet};

/// An injective map `φ: V(h) -> V(g)` with `uv ∈ E(h) ⇔ φ(u)φ(v) ∈ E(g)`, found by
/// assigning pattern vertices in label order to the smallest consistent target.
/// Exhaustive; meant for patterns of at most 8 vertices.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(h.n());
    extend(g, h, &mut map, VertexSet::EMPTY).then_some(map)
}

fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = map.len();
    if i == h.n() {
        return true;
    }
    let mut cand = g.vertices().difference(used);
    for (j, &target) in map.iter().enumerate() {
        cand = if h.has_edge(i, j) {
            cand.intersection(g.neighbors(target))
        } else {
            cand.difference(g.neighbors(target))
        };
    }
    for v in cand {
        map.push(v);
        if extend(g, h, map, used.with(v)) {
            return true;
        }
        map.pop();
    }
    false
}

/// Checks that `map` is an induced embedding of `h` into `g`.
pub fn is_induced_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    map.len() == h.n()
        && map.iter().all(|&v| v < g.n())
        && map.iter().collect::<VertexSet>().len() == map.len()
        && (0..h.n()).all(|i| (0..i).all(|j| h.has_edge(i, j) == g.has_edge(map[i], map[j])))
}
