use crate::caps::Caps;
use crate::error::Result;
use crate::graph::{write_graph6, Graph, VertexSet};
use crate::hamilton::hamiltonian_cycle;
use crate::ratio::Toughness;
use crate::structure::{
    connectivity_with_separator, independence_number, is_p2kp1_free, min_degree, toughness_with_cap,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// Every invariant the campaigns look at, for one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyProfile {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// δ(G); absent for the empty graph.
    pub min_degree: Option<usize>,
    pub connectivity: usize,
    pub independence: usize,
    pub toughness: Toughness,
    pub toughness_witness: Option<VertexSet>,
    pub hamiltonian: bool,
    /// `k -> (P2 ∪ kP1)-free`.
    pub free: BTreeMap<usize, bool>,
    pub timings_ms: BTreeMap<&'static str, f64>,
}

fn timed<T>(timings: &mut BTreeMap<&'static str, f64>, name: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(name, start.elapsed().as_secs_f64() * 1e3);
    out
}

/// Computes the full profile. `ks` selects the freeness parameters.
pub fn profile(g: &Graph, ks: &[usize], caps: &Caps) -> Result<PropertyProfile> {
    let mut t = BTreeMap::new();
    let min_degree = min_degree(g).ok();
    let connectivity = timed(&mut t, "connectivity", || connectivity_with_separator(g).0);
    let independence = timed(&mut t, "independence", || independence_number(g).0);
    let (toughness, toughness_witness) = if g.n() == 0 {
        (Toughness::Infinite, None)
    } else {
        let r = timed(&mut t, "toughness", || toughness_with_cap(g, caps.toughness))?;
        (r.value, r.witness)
    };
    let hamiltonian = g.n() >= 3 && timed(&mut t, "hamiltonian", || hamiltonian_cycle(g))?.is_some();
    let mut free = BTreeMap::new();
    timed(&mut t, "freeness", || -> Result<()> {
        for &k in ks {
            free.insert(k, is_p2kp1_free(g, k)?);
        }
        Ok(())
    })?;
    Ok(PropertyProfile {
        graph6: write_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        min_degree,
        connectivity,
        independence,
        toughness,
        toughness_witness,
        hamiltonian,
        free,
        timings_ms: t,
    })
}
