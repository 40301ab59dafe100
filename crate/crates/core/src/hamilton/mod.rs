//! Exact hamiltonian-cycle and longest-cycle solvers with canonical cycle witnesses.

mod backtrack;
mod cycle;
mod dp;
mod longest;

pub use backtrack::{hamiltonian_cycle, is_hamiltonian};
pub(crate) use cycle::segment_of;
pub use cycle::{Direction, OrientedCycle};
pub use dp::{count_hamiltonian_cycles, hamiltonian_cycle_dp, longest_cycle_lengths, DEFAULT_DP_CAP};
pub use longest::{longest_cycle, longest_cycle_with_cap, DEFAULT_LONGEST_CYCLE_CAP};
