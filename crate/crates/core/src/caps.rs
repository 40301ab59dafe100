//! Size limits for the exponential solvers.

use crate::hamilton::{DEFAULT_DP_CAP, DEFAULT_LONGEST_CYCLE_CAP};
use crate::structure::DEFAULT_TOUGHNESS_CAP;

/// Environment variable that overrides every cap with one value.
pub const CAP_ENV: &str = "TOUGHHAM_CAP_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub toughness: usize,
    pub longest_cycle: usize,
    pub dp: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { toughness: DEFAULT_TOUGHNESS_CAP, longest_cycle: DEFAULT_LONGEST_CYCLE_CAP, dp: DEFAULT_DP_CAP }
    }
}

impl Caps {
    /// The same cap for every solver.
    pub fn uniform(n: usize) -> Self {
        Caps { toughness: n, longest_cycle: n, dp: n }
    }

    /// Defaults, overridden by `TOUGHHAM_CAP_N` when it holds a number.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).map(Caps::uniform).unwrap_or_default()
    }
}
