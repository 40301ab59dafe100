//! Exact structural invariants: minimum degree, vertex connectivity,
//! independence number, toughness and (P2 ∪ kP1)-freeness.

mod connectivity;
mod freeness;
mod independence;
mod induced;
mod toughness;

pub use connectivity::{
    connectivity_with_separator, is_k_connected, local_connectivity, min_separator, vertex_connectivity,
};
pub use freeness::{is_p2kp1_free, p2kp1_pattern, p2kp1_witness, FreenessWitness};
pub use independence::{independence_number, independent_set_of_size, max_independent_within};
pub use induced::{find_induced, is_induced_embedding};
pub use toughness::{
    find_toughness_violation, is_t_tough, toughness, toughness_with_cap, TToughness, ToughnessResult,
    DEFAULT_TOUGHNESS_CAP,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// δ(G).
pub fn min_degree(g: &Graph) -> Result<usize> {
    (0..g.n()).map(|v| g.degree(v)).min().ok_or(Error::EmptyGraph)
}
