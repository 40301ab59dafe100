//! One function per step of the argument. Each either lets the replay move on
//! or stops it with a certificate.

use super::certificate::{Certificate, FailureWitness, Hypothesis, Stage};
use super::construction::Construction;
use super::structure::{ArcDecomposition, AttachmentStructure};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamilton::OrientedCycle;
use crate::ratio::{ratio, Rational};
use crate::structure::{
    find_toughness_violation, is_k_connected, min_separator, p2kp1_witness, FreenessWitness, TToughness,
};

/// Outcome of the arc scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scan {
    /// Every pair passed; `Y` with `N(Y) ∩ X = ∅` and `Y` independent.
    Independent(VertexSet),
    Stop(Certificate),
}

/// Structure for the exterior component containing the smallest off-cycle label.
pub fn attachment_structure(g: &Graph, c: &OrientedCycle, k: usize) -> Result<AttachmentStructure> {
    let exterior = g.vertices().difference(c.vertices());
    let first = exterior.first().ok_or_else(|| Error::Precondition("no vertex outside the cycle".into()))?;
    AttachmentStructure::build(g, c, g.reach(first, exterior), k)
}

fn longer(g: &Graph, c_len: usize, s: &AttachmentStructure, stage: Stage, cons: Construction) -> Result<Certificate> {
    let seq = cons.rebuild(s.working());
    let cycle = OrientedCycle::in_graph(g, seq)
        .map_err(|e| Error::Validation(format!("{} produced a bad cycle: {e}", cons.tag())))?;
    if cycle.len() <= c_len {
        return Err(Error::Validation(format!("{} did not lengthen the cycle", cons.tag())));
    }
    Ok(Certificate::LongerCycle { stage, cycle, construction: cons, orientation: s.orientation, anchor: s.x(1) })
}

/// Shortest path inside `h` from `from` to `to`, preferring smaller labels.
fn path_within(g: &Graph, h: VertexSet, from: usize, to: usize) -> Vec<usize> {
    let mut parent = [usize::MAX; 64];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in g.neighbors(v).intersection(h).difference(seen) {
            seen.insert(w);
            parent[w] = v;
            queue.push_back(w);
        }
    }
    let mut path = vec![to];
    while *path.last().expect("non-empty") != from {
        path.push(parent[*path.last().expect("non-empty")]);
    }
    path.reverse();
    path
}

fn h_path(g: &Graph, s: &AttachmentStructure, xi: usize, xj: usize) -> Vec<usize> {
    let h = s.component;
    let pi = g.neighbors(xi).intersection(h).first().expect("attachment touches H");
    let pj = g.neighbors(xj).intersection(h).first().expect("attachment touches H");
    path_within(g, h, pi, pj)
}

/// No two attachments are consecutive on `C`, and their successors are independent.
pub fn claim1_check(g: &Graph, c_len: usize, s: &AttachmentStructure) -> Result<Option<Certificate>> {
    let t = s.t();
    let wc = s.working();
    for i in 1..=t {
        let j = i % t + 1;
        if t > 1 && wc.succ(s.x(i)) == s.x(j) {
            let (xi, xj) = (s.x(i), s.x(j));
            let cons = Construction::Claim1Consecutive { xi, xj, path: h_path(g, s, xi, xj) };
            return longer(g, c_len, s, Stage::Claim1, cons).map(Some);
        }
    }
    for i in 1..=t {
        for j in i + 1..=t {
            if g.has_edge(s.xp(i), s.xp(j)) {
                let (xi, xj) = (s.x(i), s.x(j));
                let cons = Construction::Claim1Successors { xi, xj, path: h_path(g, s, xi, xj) };
                return longer(g, c_len, s, Stage::Claim1, cons).map(Some);
            }
        }
    }
    Ok(None)
}

fn witness(g: &Graph, k: usize, edge: (usize, usize), candidates: VertexSet) -> Option<FreenessWitness> {
    if candidates.len() < k {
        return None;
    }
    let w = FreenessWitness { edge: (edge.0.min(edge.1), edge.0.max(edge.1)), isolated: candidates.take_smallest(k) };
    w.validate(g, k).ok().map(|_| w)
}

/// The component is a single vertex.
pub fn claim2_check(g: &Graph, s: &AttachmentStructure, k: usize) -> Result<Option<Certificate>> {
    let h = s.component;
    let Some((u, v)) = h.iter().find_map(|u| g.neighbors(u).intersection(h).iter().find(|&v| v > u).map(|v| (u, v)))
    else {
        return Ok(None);
    };
    if s.t() < k {
        return Ok(Some(Certificate::separator(g, Stage::Claim2, s.attachment_set())));
    }
    match witness(g, k, (u, v), s.successor_set()) {
        Some(w) => Ok(Some(Certificate::induced(Stage::Claim2, w))),
        None => Err(Error::Validation("successors of the attachments do not form an induced pattern".into())),
    }
}

/// `|V(C)| >= 4n/5`, assuming every exterior component is a single vertex.
pub fn claim3_check(g: &Graph, c: &OrientedCycle) -> Result<Option<Certificate>> {
    let n = g.n();
    let on = c.vertices();
    let exterior = g.vertices().difference(on);
    if exterior.is_empty() {
        return Err(Error::Precondition("V(C) is not a cutset: no vertex outside the cycle".into()));
    }
    if !g.is_independent(exterior) {
        return Err(Error::Precondition("exterior components are not all trivial".into()));
    }
    if 5 * c.len() >= 4 * n {
        return Ok(None);
    }
    if exterior.len() == 1 {
        // V(C) leaves one component; its attachments still separate it from the rest of C
        return Ok(Some(Certificate::separator(g, Stage::Claim3, g.set_neighbors(exterior))));
    }
    Ok(Some(Certificate::ToughnessCut {
        stage: Stage::Claim3,
        hypothesis: Hypothesis::Not4Tough,
        cutset: on,
        components: exterior.len(),
        ratio: ratio(c.len(), exterior.len()),
    }))
}

/// Checks that every hypothesis really holds when the argument's own branch
/// produced nothing; a hypothesis failure found here is reported instead.
pub fn audit(g: &Graph, k: usize, caps: &Caps) -> Result<Certificate> {
    if !is_k_connected(g, 2 * k) {
        return Ok(match min_separator(g) {
            Some(cut) => Certificate::separator(g, Stage::Audit, cut),
            None => Certificate::HypothesisFailure {
                stage: Stage::Audit,
                hypothesis: Hypothesis::Not2kConnected,
                witness: FailureWitness::Order { n: g.n() },
            },
        });
    }
    if let Some(w) = p2kp1_witness(g, k)? {
        return Ok(Certificate::induced(Stage::Audit, w));
    }
    if let TToughness::Violated { cutset, components } =
        find_toughness_violation(g, Rational::from_integer(4), caps.toughness)?
    {
        return Ok(Certificate::HypothesisFailure {
            stage: Stage::Audit,
            hypothesis: Hypothesis::Not4Tough,
            witness: FailureWitness::Cut { cutset, components, ratio: ratio(cutset.len(), components) },
        });
    }
    Err(Error::Validation("every hypothesis holds but the argument found no contradiction".into()))
}

/// Walks the long arc in pairs `(y_{2m-1}, y_{2m})` and either returns `Y` or
/// the certificate of the first branch that fires.
pub fn claim4_scan(
    g: &Graph,
    c_len: usize,
    s: &AttachmentStructure,
    arcs: &ArcDecomposition,
    k: usize,
    caps: &Caps,
) -> Result<Scan> {
    let t = s.t();
    if t < k + 1 || !s.anchored {
        let cut = s.attachment_set();
        if !s.anchored && t >= 2 * k {
            return Err(Error::Validation("no anchor qualifies although t >= 2k".into()));
        }
        return Ok(Scan::Stop(Certificate::separator(g, Stage::Claim4Anchor, cut)));
    }
    let wc = s.working();
    let x = s.component.first().expect("non-empty component");
    let xs = s.x_set(k);
    let succ = s.successor_set();
    let idx = |v: usize| s.successor_index(v).filter(|&j| j <= k + 1);
    let indices = |v: usize| -> Vec<usize> { g.neighbors(v).intersection(xs).iter().filter_map(idx).collect() };
    let after = |v: usize, w: usize| wc.index(v) > wc.index(w);
    let stop = |c: Certificate| Ok(Scan::Stop(c));
    let cons = |stage: Stage, c: Construction| longer(g, c_len, s, stage, c).map(Scan::Stop);

    let mut y = VertexSet::EMPTY;
    let mut u = s.xp(k + 1);
    let mut m = 0;
    while 2 * m + 1 < arcs.h() {
        let (a, b) = (arcs.arc[2 * m], arcs.arc[2 * m + 1]);
        m += 1;
        let mut na = indices(a);
        na.sort_unstable();
        let mut nb = indices(b);
        nb.sort_unstable();
        if na.len() < 2 {
            let cand = xs.difference(g.neighbors(a)).without(u);
            return match witness(g, k, (u, a), cand) {
                Some(w) => stop(Certificate::induced(Stage::Claim4Forced, w)),
                None => audit(g, k, caps).map(Scan::Stop),
            };
        }
        if nb.is_empty() {
            y.insert(b);
            u = b;
            continue;
        }
        if nb.len() == 1 {
            let xj = s.xp(nb[0]);
            return match witness(g, k, (b, xj), xs.without(xj)) {
                Some(w) => stop(Certificate::induced(Stage::Claim4Forced, w)),
                None => audit(g, k, caps).map(Scan::Stop),
            };
        }
        let common: Vec<usize> = na.iter().copied().filter(|j| nb.contains(j)).collect();
        let (smin, lmax) = (na[0], *nb.last().expect("non-empty"));
        let far = |i: usize| (k + 2..=t).find(|&h| g.has_edge(a, s.xp(h)) && after(s.x(h), a)).map(|h| (i, h));
        let pattern = |stage: Stage, first: ((usize, usize), VertexSet), second: ((usize, usize), VertexSet)| {
            if let Some(w) = witness(g, k, first.0, first.1).or_else(|| witness(g, k, second.0, second.1)) {
                return Ok(Scan::Stop(Certificate::induced(stage, w)));
            }
            audit(g, k, caps).map(Scan::Stop)
        };
        let seg_succ = |from: usize, to: usize| wc.forward_set(from, to).intersection(succ);

        if common.len() >= 2 {
            let (i, j) = (common[0], common[1]);
            return cons(Stage::Claim4Case1, Construction::Case1 { x, xi: s.x(i), xj: s.x(j), a, b });
        }
        if let [i] = common[..] {
            let st = Stage::Claim4Case2;
            if i == 1 {
                let j = nb.iter().copied().find(|&j| j != 1).expect("two neighbors");
                return cons(st, Construction::Case2First { x, xi: s.x(1), xj: s.x(j), a, b });
            }
            if i == k + 1 {
                let j = na.iter().copied().find(|&j| j != k + 1).expect("two neighbors");
                return cons(st, Construction::Case2Last { x, xi: s.x(j), xj: s.x(k + 1), a, b });
            }
            if smin < i {
                return cons(st, Construction::Case2Min { x, xi: s.x(smin), xj: s.x(i), a, b });
            }
            if lmax > i {
                return cons(st, Construction::Case2Max { x, xi: s.x(i), xj: s.x(lmax), a, b });
            }
            if g.has_edge(x, a) {
                return cons(st, Construction::Case2Apex { x, xi: s.x(i), a, b });
            }
            if let Some((i, h)) = far(i) {
                return cons(st, Construction::Case2Far { x, xi: s.x(i), xh: s.x(h), a, b });
            }
            if t < 2 * k {
                return stop(Certificate::separator(g, st, s.attachment_set()));
            }
            let xip = s.xp(i);
            let first = ((b, xip), seg_succ(xip, a).without(xip).difference(g.neighbors(b)));
            let second = ((a, xip), seg_succ(b, xip).without(xip).difference(g.neighbors(a)));
            return pattern(st, first, second);
        }
        // no common neighbor
        let st = Stage::Claim4Case3;
        if smin < lmax {
            return cons(st, Construction::Case3Cross { x, xi: s.x(smin), xj: s.x(lmax), a, b });
        }
        if g.has_edge(x, a) {
            return cons(st, Construction::Case3Apex { x, xl: s.x(lmax), a, b });
        }
        if let Some((i, h)) = far(lmax) {
            return cons(st, Construction::Case3Far { x, xi: s.x(i), xh: s.x(h), a, b });
        }
        if t < 2 * k {
            return stop(Certificate::separator(g, st, s.attachment_set()));
        }
        let (xsp, xlp) = (s.xp(smin), s.xp(lmax));
        let first = ((a, xsp), seg_succ(b, s.x(smin)).difference(g.neighbors(a)));
        let second = ((b, xlp), seg_succ(xsp, s.xp(k + 1)).without(xlp).difference(g.neighbors(b)));
        return pattern(st, first, second);
    }

    if !g.set_neighbors(y).is_disjoint(xs) {
        return Err(Error::Validation("Y has a neighbor in X after the scan".into()));
    }
    let inner = y.iter().find_map(|p| g.neighbors(p).intersection(y).iter().find(|&q| q > p).map(|q| (p, q)));
    if let Some(edge) = inner {
        return match witness(g, k, edge, xs) {
            Some(w) => Ok(Scan::Stop(Certificate::induced(Stage::Claim4YIndependent, w))),
            None => Err(Error::Validation("X does not complete an induced pattern with an edge of Y".into())),
        };
    }
    Ok(Scan::Independent(y))
}

/// `S = V(G) ∖ (X ∪ Y)` with `X ∪ Y` independent.
pub fn final_cut(g: &Graph, s: &AttachmentStructure, y: VertexSet, k: usize) -> Result<Certificate> {
    let independent = s.x_set(k).union(y);
    if !g.is_independent(independent) {
        return Err(Error::Validation("X ∪ Y is not independent".into()));
    }
    let cutset = g.vertices().difference(independent);
    let r = ratio(cutset.len(), independent.len());
    if r < Rational::from_integer(4) {
        Ok(Certificate::IndependentCut {
            stage: Stage::FinalCut,
            hypothesis: Hypothesis::Not4Tough,
            independent,
            cutset,
            ratio: r,
        })
    } else {
        Ok(Certificate::HypothesisFailure {
            stage: Stage::FinalCut,
            hypothesis: Hypothesis::NTooSmall,
            witness: FailureWitness::Bound { independent, cutset, ratio: r },
        })
    }
}
