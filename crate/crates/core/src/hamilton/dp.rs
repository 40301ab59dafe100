//! Held–Karp style subset dynamic programming, used as an independent engine
//! next to the backtracking solver.

use super::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_DP_CAP: usize = 22;

fn check_cap(g: &Graph, cap: usize, what: &'static str) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what, n: g.n(), cap });
    }
    Ok(())
}

/// `ends[mask]` for `mask ⊆ {1..n-1}` (bit `v-1` for vertex `v`): the set of
/// vertices `v ∈ mask` ending a path from 0 that visits exactly `{0} ∪ mask`.
fn path_table(g: &Graph) -> Vec<u64> {
    let m = g.n() - 1;
    let mut ends = vec![0u64; 1 << m];
    for v in g.neighbors(0) {
        ends[1 << (v - 1)] |= 1 << v;
    }
    for mask in 1usize..(1 << m) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let visited = (mask as u64) << 1;
        for v in VertexSet::from_mask(e) {
            for w in g.neighbors(v).difference(VertexSet::from_mask(visited | 1)) {
                ends[mask | 1 << (w - 1)] |= 1 << w;
            }
        }
    }
    ends
}

/// A hamiltonian cycle found by the subset DP, in canonical form.
pub fn hamiltonian_cycle_dp(g: &Graph, cap: usize) -> Result<Option<OrientedCycle>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    check_cap(g, cap, "hamiltonian DP")?;
    let ends = path_table(g);
    let full = (1usize << (n - 1)) - 1;
    let Some(mut v) = VertexSet::from_mask(ends[full]).intersection(g.neighbors(0)).first() else {
        return Ok(None);
    };
    // Walk the table backwards.
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    loop {
        order.push(v);
        mask &= !(1 << (v - 1));
        if mask == 0 {
            break;
        }
        v = VertexSet::from_mask(ends[mask]).intersection(g.neighbors(v)).first().expect("table is consistent");
    }
    order.push(0);
    order.reverse();
    Ok(Some(OrientedCycle::new(order)?))
}

/// Number of distinct hamiltonian cycles (each undirected cycle counted once).
pub fn count_hamiltonian_cycles(g: &Graph, cap: usize) -> Result<u64> {
    let n = g.n();
    if n < 3 {
        return Ok(0);
    }
    check_cap(g, cap.min(20), "hamiltonian cycle counting")?;
    let m = n - 1;
    let mut count = vec![0u64; (1 << m) * n];
    for v in g.neighbors(0) {
        count[(1 << (v - 1)) * n + v] = 1;
    }
    for mask in 1usize..(1 << m) {
        let visited = VertexSet::from_mask(((mask as u64) << 1) | 1);
        for v in VertexSet::from_mask((mask as u64) << 1) {
            let c = count[mask * n + v];
            if c == 0 {
                continue;
            }
            for w in g.neighbors(v).difference(visited) {
                count[(mask | 1 << (w - 1)) * n + w] += c;
            }
        }
    }
    let full = (1usize << m) - 1;
    let directed: u64 = g.neighbors(0).iter().map(|v| count[full * n + v]).sum();
    Ok(directed / 2)
}

/// Longest cycle length via the all-starts subset DP (0 when acyclic).
/// Also reports, for each vertex `s`, the longest cycle whose minimum label is `s`.
pub fn longest_cycle_lengths(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.n();
    check_cap(g, cap, "longest cycle")?;
    let mut best = vec![0usize; n];
    if n < 3 {
        return Ok(best);
    }
    // ends[mask]: end vertices of paths starting at the lowest bit of mask and
    // visiting exactly mask, all other vertices larger than the start.
    let mut ends = vec![0u64; 1 << n];
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for mask in 1usize..(1 << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        if size >= 3 && e & g.neighbors(s).mask() != 0 {
            best[s] = best[s].max(size);
        }
        let above = !((2u64 << s) - 1);
        for v in VertexSet::from_mask(e) {
            let ext = g.neighbors(v).mask() & !(mask as u64) & above;
            for w in VertexSet::from_mask(ext) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::oracle;

    #[test]
    fn counts() {
        assert_eq!(count_hamiltonian_cycles(&complete(5).unwrap(), 20).unwrap(), 12);
        assert_eq!(count_hamiltonian_cycles(&cycle(7).unwrap(), 20).unwrap(), 1);
        assert_eq!(count_hamiltonian_cycles(&petersen(), 20).unwrap(), 0);
        assert_eq!(count_hamiltonian_cycles(&complete_bipartite(3, 3).unwrap(), 20).unwrap(), 6);
    }

    #[test]
    fn longest_lengths() {
        let best = longest_cycle_lengths(&petersen(), 18).unwrap();
        assert_eq!(best.iter().max(), Some(&9));
        assert_eq!(longest_cycle_lengths(&path(6).unwrap(), 18).unwrap().iter().max(), Some(&0));
    }

    #[test]
    fn matches_oracle() {
        for seed in 0..300u64 {
            let n = 3 + (seed as usize % 8);
            let g = random_gnp(n, crate::Rational::new(2 + (seed as i64 % 3), 6), seed).unwrap();
            let dp = hamiltonian_cycle_dp(&g, 22).unwrap();
            assert_eq!(dp.is_some(), oracle::is_hamiltonian(&g));
            if let Some(c) = dp {
                c.validate(&g).unwrap();
            }
            let l = *longest_cycle_lengths(&g, 18).unwrap().iter().max().unwrap();
            assert_eq!(l, oracle::longest_cycle_length(&g));
        }
    }
}
