//! Maximum independent sets by branch-and-bound over bitsets.
//!
//! Branching always takes the smallest remaining candidate and tries the
//! include branch first, so leaves are met in lexicographic order of their
//! sorted labels. Pruning uses a greedy clique cover of the candidates: an
//! independent set meets each clique at most once.

use crate::graph::{Graph, VertexSet};

/// Greedy clique cover size of `G[cand]`, an upper bound on α(G[cand]).
fn clique_cover_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut left = cand;
    let mut cliques = 0;
    while let Some(v) = left.first() {
        let mut clique = VertexSet::singleton(v);
        let mut common = g.neighbors(v).intersection(left);
        while let Some(u) = common.first() {
            clique.insert(u);
            common = common.intersection(g.neighbors(u));
        }
        left = left.difference(clique);
        cliques += 1;
    }
    cliques
}

struct Search<'g> {
    g: &'g Graph,
    best: VertexSet,
    // stop as soon as an independent set of this size is found
    target: usize,
}

impl Search<'_> {
    fn expand(&mut self, chosen: VertexSet, cand: VertexSet) -> bool {
        if chosen.len() > self.best.len() {
            self.best = chosen;
            if chosen.len() >= self.target {
                return true;
            }
        }
        let Some(v) = cand.first() else {
            return false;
        };
        // Need strictly more than the incumbent, or the target.
        let need = (self.best.len() + 1).min(self.target);
        if chosen.len() + cand.len() < need || chosen.len() + clique_cover_bound(self.g, cand) < need {
            return false;
        }
        let rest = cand.without(v);
        if self.expand(chosen.with(v), rest.difference(self.g.neighbors(v))) {
            return true;
        }
        self.expand(chosen, rest)
    }
}

/// Lexicographically smallest maximum independent set of `G[cand]`.
pub fn max_independent_within(g: &Graph, cand: VertexSet) -> VertexSet {
    let mut s = Search { g, best: VertexSet::EMPTY, target: usize::MAX };
    s.expand(VertexSet::EMPTY, cand);
    s.best
}

/// Lexicographically smallest independent `k`-subset of `cand`, if any.
pub fn independent_set_of_size(g: &Graph, cand: VertexSet, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::EMPTY);
    }
    if cand.len() < k {
        return None;
    }
    let mut s = Search { g, best: VertexSet::EMPTY, target: k };
    s.expand(VertexSet::EMPTY, cand);
    (s.best.len() == k).then_some(s.best)
}

/// α(G) with the lexicographically smallest maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let best = max_independent_within(g, g.vertices());
    (best.len(), best)
}
