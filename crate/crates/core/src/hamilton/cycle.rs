use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Along the orientation (successors).
    Forward,
    /// Against the orientation (predecessors).
    Backward,
}

/// A cycle stored in canonical form: the smallest label first, and the second
/// vertex smaller than the last. Orientation ("clockwise") is increasing index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrientedCycle {
    order: Vec<usize>,
}

impl OrientedCycle {
    /// Canonicalizes a cyclic sequence of distinct labels (at least 3).
    pub fn new(order: Vec<usize>) -> Result<Self> {
        if order.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} < 3", order.len())));
        }
        let set: VertexSet = order.iter().filter(|&&v| v < 64).collect();
        if set.len() != order.len() {
            return Err(Error::InvalidCycle("repeated or out-of-range vertex".into()));
        }
        Ok(OrientedCycle { order: canonical_order(&order) })
    }

    /// Like [`OrientedCycle::new`] and additionally checks every cycle edge in `g`.
    pub fn in_graph(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let c = Self::new(order)?;
        c.validate(g)?;
        Ok(c)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let l = self.order.len();
        for i in 0..l {
            let (a, b) = (self.order[i], self.order[(i + 1) % l]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidCycle(format!("{a}-{b} is not an edge")));
            }
        }
        if self.order != canonical_order(&self.order) {
            return Err(Error::InvalidCycle("not in canonical form".into()));
        }
        Ok(())
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

    pub fn vertices(&self) -> VertexSet {
        self.order.iter().collect()
    }

    pub fn position(&self, v: usize) -> Result<usize> {
        self.order.iter().position(|&x| x == v).ok_or(Error::NotOnCycle(v))
    }

    /// x⁺.
    pub fn successor(&self, v: usize) -> Result<usize> {
        let i = self.position(v)?;
        Ok(self.order[(i + 1) % self.len()])
    }

    /// x⁻.
    pub fn predecessor(&self, v: usize) -> Result<usize> {
        let i = self.position(v)?;
        Ok(self.order[(i + self.len() - 1) % self.len()])
    }

    /// The path of the cycle from `u` to `v` in `dir`, both ends included.
    pub fn segment(&self, u: usize, v: usize, dir: Direction) -> Result<Vec<usize>> {
        let (i, j) = (self.position(u)?, self.position(v)?);
        Ok(segment_of(&self.order, i, j, dir))
    }
}

/// Vertices of `order` from index `i` to index `j` (inclusive), walking `dir`.
pub(crate) fn segment_of(order: &[usize], i: usize, j: usize, dir: Direction) -> Vec<usize> {
    let l = order.len();
    let steps = match dir {
        Direction::Forward => (j + l - i) % l,
        Direction::Backward => (i + l - j) % l,
    };
    (0..=steps)
        .map(|s| match dir {
            Direction::Forward => order[(i + s) % l],
            Direction::Backward => order[(i + l - s) % l],
        })
        .collect()
}

/// Rotation to the minimum label, then reflection so the second entry is the
/// smaller neighbor of the first.
pub(crate) fn canonical_order(order: &[usize]) -> Vec<usize> {
    let l = order.len();
    let (start, _) = order.iter().enumerate().min_by_key(|&(_, &v)| v).expect("non-empty");
    let next = order[(start + 1) % l];
    let prev = order[(start + l - 1) % l];
    if next < prev {
        segment_of(order, start, (start + l - 1) % l, Direction::Forward)
    } else {
        segment_of(order, start, (start + 1) % l, Direction::Backward)
    }
}

impl Serialize for OrientedCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.order.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn segments() {
        let c = OrientedCycle::new(vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.segment(1, 3, Direction::Forward).unwrap(), vec![1, 2, 3]);
        assert_eq!(c.segment(1, 3, Direction::Backward).unwrap(), vec![1, 0, 4, 3]);
        assert_eq!(c.segment(2, 2, Direction::Forward).unwrap(), vec![2]);
        assert_eq!(c.segment(2, 9, Direction::Forward), Err(Error::NotOnCycle(9)));
    }

    #[test]
    fn canonical_form() {
        let c = OrientedCycle::new(vec![3, 1, 4, 0, 2]).unwrap();
        assert_eq!(c.order(), &[0, 2, 3, 1, 4]);
        let c = OrientedCycle::new(vec![2, 0, 1]).unwrap();
        assert_eq!(c.order(), &[0, 1, 2]);
        assert_eq!(c.successor(2).unwrap(), 0);
        assert_eq!(c.predecessor(0).unwrap(), 2);
        assert!(OrientedCycle::new(vec![0, 1]).is_err());
        assert!(OrientedCycle::new(vec![0, 1, 0]).is_err());
    }

    #[test]
    fn validation() {
        let g = cycle(5).unwrap();
        assert!(OrientedCycle::in_graph(&g, vec![0, 1, 2, 3, 4]).is_ok());
        assert!(OrientedCycle::in_graph(&g, vec![0, 2, 1, 3, 4]).is_err());
    }
}
