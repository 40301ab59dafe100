//! Brute-force reference implementations.
//!
//! Every function here enumerates its whole search space with no pruning and
//! shares no code with the production solvers beyond the [`Graph`] primitives.
//! They back the test suites and the harness's re-verification of violation
//! records, so they are only practical for small graphs.

use crate::graph::{Graph, VertexSet};
use crate::ratio::{ratio, Rational, Toughness};
use std::cmp::Ordering;

/// Minimum of `|S| / c(G - S)` over every subset `S` with `c(G - S) >= 2`,
/// with the smallest-then-lexicographic minimizer.
pub fn toughness(g: &Graph) -> (Toughness, Option<VertexSet>) {
    assert!(g.n() <= 24, "brute-force toughness is limited to n <= 24");
    let mut best: Option<(Rational, VertexSet)> = None;
    for mask in 0..(1u64 << g.n()) {
        let s = VertexSet::from_mask(mask);
        let c = g.components_after_removing(s);
        if c < 2 {
            continue;
        }
        let r = ratio(s.len(), c);
        let better = match &best {
            None => true,
            Some((br, bs)) => match r.cmp(br) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (s.len(), s.lex_cmp(*bs)) < (bs.len(), Ordering::Equal),
            },
        };
        if better {
            best = Some((r, s));
        }
    }
    match best {
        Some((r, s)) => (Toughness::Finite(r), Some(s)),
        None => (Toughness::Infinite, None),
    }
}

/// Smallest `|S|` such that `G - S` is disconnected or has fewer than two vertices.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    for k in 0..n {
        let found = subsets_of_size(n, k).any(|s| {
            let rest = n - k;
            rest < 2 || g.components_after_removing(s) >= 2
        });
        if found {
            return k;
        }
    }
    n.saturating_sub(1)
}

/// Largest independent set size.
pub fn independence_number(g: &Graph) -> usize {
    (0..(1u64 << g.n())).map(VertexSet::from_mask).filter(|&s| g.is_independent(s)).map(|s| s.len()).max().unwrap_or(0)
}

/// Every subset of `0..n` with exactly `k` elements, in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: VertexSet = idx.iter().collect();
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Length of a longest cycle by exhaustive path enumeration (0 if acyclic).
pub fn longest_cycle_length(g: &Graph) -> usize {
    fn extend(g: &Graph, start: usize, v: usize, used: VertexSet, len: usize, best: &mut usize) {
        if len >= 3 && g.has_edge(v, start) {
            *best = (*best).max(len);
        }
        for w in g.neighbors(v) {
            if w > start && !used.contains(w) {
                extend(g, start, w, used.with(w), len + 1, best);
            }
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        extend(g, s, s, VertexSet::singleton(s), 1, &mut best);
    }
    best
}

/// Hamiltonicity by enumerating every path from vertex 0.
pub fn is_hamiltonian(g: &Graph) -> bool {
    g.n() >= 3 && longest_cycle_length(g) == g.n()
}

/// Whether `{u, v} ∪ isolated` induces one edge plus `|isolated|` isolated vertices.
pub fn is_p2_kp1(g: &Graph, u: usize, v: usize, isolated: VertexSet) -> bool {
    g.has_edge(u, v)
        && !isolated.contains(u)
        && !isolated.contains(v)
        && g.is_independent(isolated)
        && g.neighbors(u).is_disjoint(isolated)
        && g.neighbors(v).is_disjoint(isolated)
}

/// Some induced P2 ∪ kP1, by trying every edge and every k-subset.
pub fn has_induced_p2_kp1(g: &Graph, k: usize) -> bool {
    g.edges().any(|(u, v)| subsets_of_size(g.n(), k).any(|s| is_p2_kp1(g, u, v, s)))
}
