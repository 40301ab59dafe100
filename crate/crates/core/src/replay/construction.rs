//! The explicit longer-cycle constructions. Each variant names the vertices
//! its formula uses; `rebuild` reproduces the cycle from them on the working
//! cycle, so a certificate can be re-derived independently of the search.
//!
//! Notation: `x` is the exterior vertex, `xi`/`xj`/`xs`/`xl`/`xh` attachments,
//! `a = y_{2m-1}` and `b = y_{2m}` the current arc pair. Successors are taken
//! on the working cycle.

use super::structure::WorkingCycle;
use crate::hamilton::Direction::{Backward, Forward};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum Construction {
    /// `xj = xi⁺`: `xi P xj →C xi`, with `P` a path through the component.
    Claim1Consecutive { xi: usize, xj: usize, path: Vec<usize> },
    /// `xi⁺ xj⁺ ∈ E`: `xi P xj ←C xi⁺ xj⁺ →C xi`.
    Claim1Successors { xi: usize, xj: usize, path: Vec<usize> },
    /// Two common neighbors `xi⁺, xj⁺` of `a` and `b`.
    Case1 { x: usize, xi: usize, xj: usize, a: usize, b: usize },
    /// Single common neighbor `x_1⁺`, second neighbor `xj⁺` of `b`.
    Case2First { x: usize, xi: usize, xj: usize, a: usize, b: usize },
    /// Single common neighbor `x_{k+1}⁺`, second neighbor `xi⁺` of `a`.
    Case2Last { x: usize, xi: usize, xj: usize, a: usize, b: usize },
    /// `s < i`.
    Case2Min { x: usize, xi: usize, xj: usize, a: usize, b: usize },
    /// `ℓ > i`.
    Case2Max { x: usize, xi: usize, xj: usize, a: usize, b: usize },
    /// `a ∈ N(x)`: `x a ←C xi⁺ b →C xi x`.
    Case2Apex { x: usize, xi: usize, a: usize, b: usize },
    /// `a xh⁺ ∈ E` for a far attachment: `x xi ←C xh⁺ a ←C xi⁺ b →C xh x`.
    Case2Far { x: usize, xi: usize, xh: usize, a: usize, b: usize },
    /// `s < ℓ` with no common neighbor.
    Case3Cross { x: usize, xi: usize, xj: usize, a: usize, b: usize },
    /// `a ∈ N(x)`: `x xl ←C b xl⁺ →C a x`.
    Case3Apex { x: usize, xl: usize, a: usize, b: usize },
    /// Far attachment with `xi = x_ℓ`.
    Case3Far { x: usize, xi: usize, xh: usize, a: usize, b: usize },
}

impl Construction {
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::Claim1Consecutive { .. } => "claim1-consecutive",
            Construction::Claim1Successors { .. } => "claim1-successors",
            Construction::Case1 { .. } => "case1",
            Construction::Case2First { .. } => "case2-first",
            Construction::Case2Last { .. } => "case2-last",
            Construction::Case2Min { .. } => "case2-min",
            Construction::Case2Max { .. } => "case2-max",
            Construction::Case2Apex { .. } => "case2-apex",
            Construction::Case2Far { .. } => "case2-far",
            Construction::Case3Cross { .. } => "case3-cross",
            Construction::Case3Apex { .. } => "case3-apex",
            Construction::Case3Far { .. } => "case3-far",
        }
    }

    /// The cyclic vertex sequence of the constructed cycle (not canonicalized).
    pub fn rebuild(&self, wc: &WorkingCycle) -> Vec<usize> {
        use Construction::*;
        match *self {
            Claim1Consecutive { xi, xj, ref path } => {
                let mut out = path.clone();
                out.extend(wc.segment(xj, xi, Forward));
                out
            }
            Claim1Successors { xi, xj, ref path } => {
                let mut out = path.clone();
                out.extend(wc.segment(xj, wc.succ(xi), Backward));
                out.extend(wc.segment(wc.succ(xj), xi, Forward));
                out
            }
            Case1 { x, xi, xj, a, b }
            | Case2First { x, xi, xj, a, b }
            | Case2Last { x, xi, xj, a, b }
            | Case2Min { x, xi, xj, a, b }
            | Case2Max { x, xi, xj, a, b }
            | Case3Cross { x, xi, xj, a, b } => {
                // x xi ←C b xj⁺ →C a xi⁺ →C xj x
                let mut out = vec![x];
                out.extend(wc.segment(xi, b, Backward));
                out.extend(wc.segment(wc.succ(xj), a, Forward));
                out.extend(wc.segment(wc.succ(xi), xj, Forward));
                out
            }
            Case2Apex { x, xi, a, b } => {
                let mut out = vec![x];
                out.extend(wc.segment(a, wc.succ(xi), Backward));
                out.extend(wc.segment(b, xi, Forward));
                out
            }
            Case2Far { x, xi, xh, a, b } | Case3Far { x, xi, xh, a, b } => {
                let mut out = vec![x];
                out.extend(wc.segment(xi, wc.succ(xh), Backward));
                out.extend(wc.segment(a, wc.succ(xi), Backward));
                out.extend(wc.segment(b, xh, Forward));
                out
            }
            Case3Apex { x, xl, a, b } => {
                let mut out = vec![x];
                out.extend(wc.segment(xl, b, Backward));
                out.extend(wc.segment(wc.succ(xl), a, Forward));
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::{Direction, OrientedCycle};

    #[test]
    fn crossing_covers_the_cycle() {
        // working cycle 0..12 with x_i = 1, x_j = 3, a = 7, b = 8, exterior x = 20
        let c = OrientedCycle::new((0..12).collect()).unwrap();
        let wc = WorkingCycle::new(&c, Direction::Forward, 0).unwrap();
        let cons = Construction::Case1 { x: 20, xi: 1, xj: 3, a: 7, b: 8 };
        let got = cons.rebuild(&wc);
        assert_eq!(got, vec![20, 1, 0, 11, 10, 9, 8, 4, 5, 6, 7, 2, 3]);
        assert_eq!(cons.tag(), "case1");
    }

    #[test]
    fn apex_and_far_cover_the_cycle() {
        let c = OrientedCycle::new((0..12).collect()).unwrap();
        let wc = WorkingCycle::new(&c, Direction::Forward, 0).unwrap();
        let got = Construction::Case2Apex { x: 20, xi: 2, a: 7, b: 8 }.rebuild(&wc);
        assert_eq!(got, vec![20, 7, 6, 5, 4, 3, 8, 9, 10, 11, 0, 1, 2]);
        let got = Construction::Case2Far { x: 20, xi: 2, xh: 9, a: 7, b: 8 }.rebuild(&wc);
        assert_eq!(got, vec![20, 2, 1, 0, 11, 10, 7, 6, 5, 4, 3, 8, 9]);
        let got = Construction::Case3Apex { x: 20, xl: 2, a: 7, b: 8 }.rebuild(&wc);
        assert_eq!(got, vec![20, 2, 1, 0, 11, 10, 9, 8, 3, 4, 5, 6, 7]);
        let mut s = got.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 13);
    }
}
