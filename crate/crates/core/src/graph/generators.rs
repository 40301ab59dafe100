//! Deterministic constructors for the standard families.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::ratio::Rational;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn edgeless(n: usize) -> Result<Graph> {
    Graph::new(n)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// K_{a,b} with side A = `0..a` and side B = `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::new(n)?;
    for u in 0..n {
        g.add_edge(u, (u + 1) % n);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 1..n {
        g.add_edge(u - 1, u);
    }
    Ok(g)
}

/// Outer 5-cycle on `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10).expect("10 <= 64");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// `g1` on labels `0..n1` followed by `g2` shifted by `n1`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n();
    let mut g = Graph::new(n1 + g2.n())?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(n1 + u, n1 + v);
    }
    Ok(g)
}

/// Erdős–Rényi G(n, p) driven by ChaCha8 seeded through `seed_from_u64`.
///
/// Pairs are visited in graph6 order (`j` ascending, then `i < j`); each pair
/// consumes one 64-bit word `x` and becomes an edge iff `floor(x * q / 2^64) < p`
/// for `p = num/q`. The stream is therefore a fixed function of `(n, p, seed)`.
pub fn random_gnp(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    if *p.numer() < 0 || p > Rational::from_integer(1) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    let num = *p.numer() as u128;
    let den = *p.denom() as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n)?;
    for j in 1..n {
        for i in 0..j {
            let x = rng.next_u64() as u128;
            if (x * den) >> 64 < num {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_layout() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(1, 4));
    }

    #[test]
    fn forbidden_pattern() {
        let mut g = path(2).unwrap();
        for _ in 0..4 {
            g = disjoint_union(&g, &path(1).unwrap()).unwrap();
        }
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.check_invariants());
    }

    #[test]
    fn size_errors() {
        assert!(matches!(cycle(2), Err(Error::InvalidSize(_))));
        assert!(matches!(complete(65), Err(Error::TooLarge(65))));
        assert!(matches!(complete_bipartite(40, 30), Err(Error::TooLarge(70))));
        assert!(complete(64).is_ok());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(random_gnp(10, Rational::from_integer(0), 1).unwrap().edge_count(), 0);
        assert_eq!(random_gnp(10, Rational::from_integer(1), 1).unwrap(), complete(10).unwrap());
        let half = Rational::new(1, 2);
        let a = random_gnp(12, half, 42).unwrap();
        assert_eq!(a, random_gnp(12, half, 42).unwrap());
        assert_ne!(a, random_gnp(12, half, 43).unwrap());
        assert!(random_gnp(5, Rational::new(3, 2), 0).is_err());
    }
}
