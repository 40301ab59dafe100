//! The objects the longest-cycle argument is phrased in: an oriented working
//! copy of `C`, the exterior component `H` with its attachment vertices, and
//! the decomposition of the long arc into `y_1 .. y_h`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamilton::{segment_of, Direction, OrientedCycle};
use serde::Serialize;

const ABSENT: u8 = u8::MAX;

/// `C` with a chosen orientation, stored from a chosen start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkingCycle {
    order: Vec<usize>,
    pos: [u8; 64],
}

impl WorkingCycle {
    /// `c` read in `orientation` (forward is the canonical order) and rotated to start at `start`.
    pub fn new(c: &OrientedCycle, orientation: Direction, start: usize) -> Result<Self> {
        let l = c.len();
        let base = c.order();
        let i = c.position(start)?;
        let order = match orientation {
            Direction::Forward => segment_of(base, i, (i + l - 1) % l, Direction::Forward),
            Direction::Backward => segment_of(base, i, (i + 1) % l, Direction::Backward),
        };
        let mut pos = [ABSENT; 64];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p as u8;
        }
        Ok(WorkingCycle { order, pos })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.pos[v] != ABSENT
    }

    /// Index of `v` counted from the start vertex along the orientation.
    pub fn index(&self, v: usize) -> usize {
        debug_assert!(self.contains(v), "{v} not on cycle");
        self.pos[v] as usize
    }

    /// v⁺.
    pub fn succ(&self, v: usize) -> usize {
        self.order[(self.index(v) + 1) % self.len()]
    }

    /// v⁻.
    pub fn pred(&self, v: usize) -> usize {
        self.order[(self.index(v) + self.len() - 1) % self.len()]
    }

    /// `u →C v` (forward) or `u ←C v` (backward), ends included.
    pub fn segment(&self, u: usize, v: usize, dir: Direction) -> Vec<usize> {
        segment_of(&self.order, self.index(u), self.index(v), dir)
    }

    /// Vertex set of `u →C v`.
    pub fn forward_set(&self, u: usize, v: usize) -> VertexSet {
        self.segment(u, v, Direction::Forward).into_iter().collect()
    }
}

/// One exterior component `H` of `G - V(C)` with its attachments `x_1 .. x_t`
/// (all neighbors of `H` on `C`, in orientation order from the anchor `x_1`)
/// and their successors `x_1⁺ .. x_t⁺`.
#[derive(Clone, Debug, Serialize)]
pub struct AttachmentStructure {
    pub component: VertexSet,
    #[serde(serialize_with = "ser_direction")]
    pub orientation: Direction,
    /// The working cycle's order, starting at `x_1`.
    pub cycle: Vec<usize>,
    pub attachments: Vec<usize>,
    pub successors: Vec<usize>,
    /// Whether the anchor satisfies `|V(x_1 →C x_{k+1})| <= |V(x_{k+1} →C x_1)|`.
    pub anchored: bool,
    #[serde(skip)]
    working: Option<WorkingCycle>,
}

fn ser_direction<S: serde::Serializer>(d: &Direction, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match d {
        Direction::Forward => "forward",
        Direction::Backward => "backward",
    })
}

impl AttachmentStructure {
    /// Builds the structure for component `h`. When `t >= k + 1`, both
    /// orientations (forward first) and all `t` anchors (in orientation order
    /// from the cycle's first vertex) are tried, and the first one with
    /// `|V(x_1 →C x_{k+1})| <= |V(x_{k+1} →C x_1)|` is kept.
    pub fn build(g: &Graph, c: &OrientedCycle, h: VertexSet, k: usize) -> Result<Self> {
        let on_cycle = c.vertices();
        if h.is_empty() || !h.is_disjoint(on_cycle) {
            return Err(Error::Precondition("component must be a non-empty set off the cycle".into()));
        }
        let touch = g.set_neighbors(h);
        if !touch.is_subset(on_cycle) {
            return Err(Error::Precondition("set is not a full component of G - V(C)".into()));
        }
        if touch.is_empty() {
            return Err(Error::Precondition("component has no neighbor on the cycle".into()));
        }
        let first = c.order()[0];
        let mut fallback = None;
        for orientation in [Direction::Forward, Direction::Backward] {
            let base = WorkingCycle::new(c, orientation, first)?;
            let atts: Vec<usize> = base.order().iter().copied().filter(|&v| touch.contains(v)).collect();
            let t = atts.len();
            for r in 0..t {
                let wc = WorkingCycle::new(c, orientation, atts[r])?;
                let anchored = t > k && 2 * wc.index(atts[(r + k) % t]) <= wc.len();
                if anchored || fallback.is_none() {
                    let s = Self::assemble(h, orientation, wc, touch, anchored);
                    if anchored {
                        return Ok(s);
                    }
                    fallback = Some(s);
                }
                if t <= k {
                    // no anchor condition to satisfy
                    return Ok(fallback.expect("set above"));
                }
            }
        }
        Ok(fallback.expect("at least one attachment"))
    }

    fn assemble(h: VertexSet, orientation: Direction, wc: WorkingCycle, touch: VertexSet, anchored: bool) -> Self {
        let attachments: Vec<usize> = wc.order().iter().copied().filter(|&v| touch.contains(v)).collect();
        let successors = attachments.iter().map(|&v| wc.succ(v)).collect();
        AttachmentStructure {
            component: h,
            orientation,
            cycle: wc.order().to_vec(),
            attachments,
            successors,
            anchored,
            working: Some(wc),
        }
    }

    pub fn working(&self) -> &WorkingCycle {
        self.working.as_ref().expect("built through AttachmentStructure::build")
    }

    /// t.
    pub fn t(&self) -> usize {
        self.attachments.len()
    }

    /// `x_i` with the 1-based index used in the argument.
    pub fn x(&self, i: usize) -> usize {
        self.attachments[i - 1]
    }

    /// `x_i⁺`, 1-based.
    pub fn xp(&self, i: usize) -> usize {
        self.successors[i - 1]
    }

    pub fn attachment_set(&self) -> VertexSet {
        self.attachments.iter().collect()
    }

    /// `{x_1⁺, .., x_t⁺}`.
    pub fn successor_set(&self) -> VertexSet {
        self.successors.iter().collect()
    }

    /// `X = {x_1⁺, .., x_{k+1}⁺}`.
    pub fn x_set(&self, k: usize) -> VertexSet {
        self.successors.iter().take(k + 1).collect()
    }

    /// 1-based index `j` with `x_j⁺ = v`.
    pub fn successor_index(&self, v: usize) -> Option<usize> {
        self.successors.iter().position(|&s| s == v).map(|i| i + 1)
    }
}

/// The long arc `x_{k+1} →C x_1 = x_{k+1} x_{k+1}⁺ y_1 .. y_h x_1` and the
/// alternating set `Y = {y_2, y_4, ..}` (up to `y_h` or `y_{h-1}`).
#[derive(Clone, Debug, Serialize)]
pub struct ArcDecomposition {
    pub arc: Vec<usize>,
    pub y_set: VertexSet,
}

impl ArcDecomposition {
    pub fn new(s: &AttachmentStructure, k: usize) -> Result<Self> {
        if s.t() < k + 1 {
            return Err(Error::Precondition(format!("need t >= k + 1, have t = {}", s.t())));
        }
        let wc = s.working();
        let from = wc.index(s.xp(k + 1)) + 1;
        let arc = wc.order()[from..].to_vec();
        let y_set = arc.iter().skip(1).step_by(2).copied().collect();
        Ok(ArcDecomposition { arc, y_set })
    }

    /// h.
    pub fn h(&self) -> usize {
        self.arc.len()
    }

    /// `y_i`, 1-based.
    pub fn y(&self, i: usize) -> usize {
        self.arc[i - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn apex() -> (Graph, OrientedCycle) {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 2), (6, 4)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let c = OrientedCycle::in_graph(&g, (0..6).collect()).unwrap();
        (g, c)
    }

    #[test]
    fn working_cycle_orientations() {
        let c = OrientedCycle::new(vec![0, 1, 2, 3, 4]).unwrap();
        let f = WorkingCycle::new(&c, Direction::Forward, 2).unwrap();
        assert_eq!(f.order(), &[2, 3, 4, 0, 1]);
        assert_eq!((f.succ(1), f.pred(2)), (2, 1));
        let b = WorkingCycle::new(&c, Direction::Backward, 2).unwrap();
        assert_eq!(b.order(), &[2, 1, 0, 4, 3]);
        assert_eq!(b.succ(2), 1);
        assert_eq!(b.segment(0, 3, Direction::Forward), vec![0, 4, 3]);
        assert_eq!(b.segment(0, 3, Direction::Backward), vec![0, 1, 2, 3]);
    }

    #[test]
    fn apex_structure() {
        let (g, c) = apex();
        let s = AttachmentStructure::build(&g, &c, VertexSet::singleton(6), 4).unwrap();
        assert_eq!(s.t(), 3);
        assert_eq!(s.attachments, vec![0, 2, 4]);
        assert_eq!(s.successor_set().to_vec(), vec![1, 3, 5]);
        assert!(!s.anchored);
    }

    #[test]
    fn anchor_condition() {
        // 12-cycle, apex adjacent to 0, 2, 4, 6, 8 (t = 5, k = 2): the forward
        // anchor x_1 = 0 has x_3 = 4, |V(0..4)| = 5 <= |V(4..0)| = 9.
        let mut edges: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
        edges.extend([0, 2, 4, 6, 8].map(|v| (12, v)));
        let g = Graph::from_edges(13, &edges).unwrap();
        let c = OrientedCycle::in_graph(&g, (0..12).collect()).unwrap();
        let s = AttachmentStructure::build(&g, &c, VertexSet::singleton(12), 2).unwrap();
        assert!(s.anchored);
        assert_eq!((s.x(1), s.x(3), s.orientation), (0, 4, Direction::Forward));
        let arcs = ArcDecomposition::new(&s, 2).unwrap();
        assert_eq!(arcs.arc, vec![6, 7, 8, 9, 10, 11]);
        assert_eq!(arcs.y_set.to_vec(), vec![7, 9, 11]);
        // k = 4: every x_1 →C x_5 spans 10 of the 12 cycle edges, in both
        // orientations, so no anchor qualifies and the first one is kept.
        let s = AttachmentStructure::build(&g, &c, VertexSet::singleton(12), 4).unwrap();
        assert!(!s.anchored);
        assert_eq!((s.x(1), s.orientation), (0, Direction::Forward));
    }

    #[test]
    fn rejects_bad_components() {
        let (g, c) = apex();
        assert!(AttachmentStructure::build(&g, &c, VertexSet::singleton(0), 4).is_err());
        assert!(AttachmentStructure::build(&g, &c, VertexSet::EMPTY, 4).is_err());
    }
}
