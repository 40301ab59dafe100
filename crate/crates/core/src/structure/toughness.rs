//! Exact toughness by branch-and-bound over cutsets.
//!
//! Vertices are decided one at a time, either into the cutset `S` or out of it.
//! For a partial assignment with decided-out set `O` and undecided set `U`, the
//! final number of components is at most `c(G[O])` plus the number of components
//! made purely of `U`-vertices with no neighbor in `O`; the latter are bounded by
//! a clique cover of those vertices. Dividing `|S|` by this bound gives a lower
//! bound on every completion's ratio.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ratio::{ratio, Rational, Toughness};
use serde::Serialize;
use std::cmp::Ordering;

pub const DEFAULT_TOUGHNESS_CAP: usize = 20;

/// τ(G) with a minimizing cutset (smallest, then lexicographically first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessResult {
    pub value: Toughness,
    pub witness: Option<VertexSet>,
}

impl ToughnessResult {
    /// c(G - witness), for finite results.
    pub fn components(&self, g: &Graph) -> Option<usize> {
        self.witness.map(|s| g.components_after_removing(s))
    }
}

/// Outcome of a t-toughness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TToughness {
    Tough,
    /// A cutset with `|S| < t * c(G - S)`.
    Violated {
        cutset: VertexSet,
        components: usize,
    },
}

impl TToughness {
    pub fn is_tough(&self) -> bool {
        matches!(self, TToughness::Tough)
    }
}

fn upper_bound_components(g: &Graph, out: VertexSet, undecided: VertexSet) -> usize {
    let free = undecided.difference(g.set_neighbors(out));
    g.count_components_within(out) + clique_cover(g, free)
}

fn clique_cover(g: &Graph, cand: VertexSet) -> usize {
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

#[derive(Clone, Copy)]
struct Incumbent {
    ratio: Rational,
    cutset: VertexSet,
}

impl Incumbent {
    fn beaten_by(&self, r: Rational, s: VertexSet) -> bool {
        match r.cmp(&self.ratio) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match s.len().cmp(&self.cutset.len()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => s.lex_cmp(self.cutset) == Ordering::Less,
            },
        }
    }
}

enum Goal {
    /// Exact minimum with tie-breaking.
    Minimize(Option<Incumbent>),
    /// Any cutset with ratio strictly below the threshold.
    Below(Rational, Option<(VertexSet, usize)>),
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    goal: Goal,
}

impl Search<'_> {
    /// Returns true when the search can stop.
    fn run(&mut self, depth: usize, cut: VertexSet, out: VertexSet, undecided: VertexSet) -> bool {
        let ub = upper_bound_components(self.g, out, undecided);
        if ub < 2 {
            return false;
        }
        let lb = ratio(cut.len(), ub);
        match &self.goal {
            Goal::Minimize(Some(inc)) => {
                if lb > inc.ratio || (lb == inc.ratio && cut.len() > inc.cutset.len()) {
                    return false;
                }
            }
            Goal::Below(t, _) => {
                if lb >= *t {
                    return false;
                }
            }
            Goal::Minimize(None) => {}
        }
        if depth == self.order.len() {
            let c = self.g.count_components_within(out);
            if c < 2 {
                return false;
            }
            let r = ratio(cut.len(), c);
            match &mut self.goal {
                Goal::Minimize(inc) => {
                    if inc.is_none_or(|i| i.beaten_by(r, cut)) {
                        *inc = Some(Incumbent { ratio: r, cutset: cut });
                    }
                    false
                }
                Goal::Below(t, found) => {
                    if r < *t {
                        *found = Some((cut, c));
                        true
                    } else {
                        false
                    }
                }
            }
        } else {
            let v = self.order[depth];
            let rest = undecided.without(v);
            // Out first: it keeps |S| small, which is where good ratios live.
            self.run(depth + 1, cut, out.with(v), rest) || self.run(depth + 1, cut.with(v), out, rest)
        }
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "toughness", n: g.n(), cap });
    }
    Ok(())
}

/// Exact τ(G) for `n <= cap`.
pub fn toughness_with_cap(g: &Graph, cap: usize) -> Result<ToughnessResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    check_cap(g, cap)?;
    if g.is_complete() {
        return Ok(ToughnessResult { value: Toughness::Infinite, witness: None });
    }
    // Seed with neighborhood cuts N(v), which always leave v isolated.
    let mut seed: Option<Incumbent> = None;
    for v in 0..g.n() {
        let s = g.neighbors(v);
        let c = g.components_after_removing(s);
        if c >= 2 {
            let r = ratio(s.len(), c);
            if seed.is_none_or(|i| i.beaten_by(r, s)) {
                seed = Some(Incumbent { ratio: r, cutset: s });
            }
        }
    }
    let mut search = Search { g, order: (0..g.n()).collect(), goal: Goal::Minimize(seed) };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY, g.vertices());
    match search.goal {
        Goal::Minimize(Some(inc)) => {
            Ok(ToughnessResult { value: Toughness::Finite(inc.ratio), witness: Some(inc.cutset) })
        }
        _ => unreachable!("non-complete graphs have a cutset"),
    }
}

/// Exact τ(G) with the default cap.
pub fn toughness(g: &Graph) -> Result<ToughnessResult> {
    toughness_with_cap(g, DEFAULT_TOUGHNESS_CAP)
}

/// Some cutset with `|S| / c(G - S) < t`, if one exists. Stops at the first hit.
pub fn find_toughness_violation(g: &Graph, t: Rational, cap: usize) -> Result<TToughness> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    check_cap(g, cap)?;
    if t <= Rational::from_integer(0) || g.is_complete() {
        return Ok(TToughness::Tough);
    }
    let mut search = Search { g, order: (0..g.n()).collect(), goal: Goal::Below(t, None) };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY, g.vertices());
    Ok(match search.goal {
        Goal::Below(_, Some((cutset, components))) => TToughness::Violated { cutset, components },
        _ => TToughness::Tough,
    })
}

/// τ(G) >= t. On failure the reported cutset is the canonical toughness witness.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<TToughness> {
    if t < Rational::from_integer(0) {
        return Err(Error::InvalidArgument(format!("toughness threshold {t} is negative")));
    }
    match find_toughness_violation(g, t, DEFAULT_TOUGHNESS_CAP)? {
        TToughness::Tough => Ok(TToughness::Tough),
        TToughness::Violated { .. } => {
            let res = toughness(g)?;
            let cutset = res.witness.expect("violation implies a finite toughness");
            Ok(TToughness::Violated { cutset, components: g.components_after_removing(cutset) })
        }
    }
}
