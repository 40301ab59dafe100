//! Executable replay of the longest-cycle argument for 4-tough, 2k-connected,
//! (P2 ∪ kP1)-free graphs.
//!
//! Given `G`, `k >= 4` and a longest cycle `C`, the replay runs the argument's
//! claims in order and stops at the first one that does not go through. Where
//! the argument would derive a contradiction it returns the object that
//! contradicts something: a longer cycle, an induced P2 ∪ kP1, a cutset with
//! ratio below 4, or a witness that a hypothesis fails outright. Every outcome
//! is re-validated before it is returned.

mod certificate;
mod claims;
mod construction;
mod structure;

pub use certificate::{
    validate_certificate, validate_outcome, Certificate, FailureWitness, Hypothesis, ReplayOutcome, Stage,
};
pub use claims::{attachment_structure, audit, claim1_check, claim2_check, claim3_check, claim4_scan, final_cut, Scan};
pub use construction::Construction;
pub use structure::{ArcDecomposition, AttachmentStructure, WorkingCycle};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::{longest_cycle_with_cap, OrientedCycle};
use crate::structure::min_separator;
use serde::Serialize;

/// The cycle a replay started from and what it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub k: usize,
    /// `C`; absent when the graph has no cycle.
    pub input_cycle: Option<OrientedCycle>,
    /// Whether `C` was computed here as a longest cycle (rather than supplied).
    pub computed: bool,
    #[serde(flatten)]
    pub outcome: ReplayOutcome,
}

impl ReplayReport {
    /// Re-runs the independent validator on the outcome.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        validate_outcome(g, self.k, self.input_cycle.as_ref(), &self.outcome)
    }
}

pub fn replay(g: &Graph, k: usize, c: Option<&OrientedCycle>) -> Result<ReplayReport> {
    replay_with_caps(g, k, c, &Caps::default())
}

pub fn replay_with_caps(g: &Graph, k: usize, c: Option<&OrientedCycle>, caps: &Caps) -> Result<ReplayReport> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!("replay needs k >= 4, got {k}")));
    }
    let (cycle, computed) = match c {
        Some(c) => {
            c.validate(g)?;
            (Some(c.clone()), false)
        }
        None if g.n() < 3 => (None, true),
        None => (longest_cycle_with_cap(g, caps.longest_cycle)?, true),
    };
    let outcome = match &cycle {
        None => ReplayOutcome::Certificate(no_cycle(g)),
        Some(c) => run(g, k, c, caps)?,
    };
    if computed && matches!(outcome, ReplayOutcome::Certificate(Certificate::LongerCycle { .. })) {
        return Err(Error::Validation("found a cycle longer than the computed longest cycle".into()));
    }
    let report = ReplayReport { k, input_cycle: cycle, computed, outcome };
    report.validate(g)?;
    Ok(report)
}

fn no_cycle(g: &Graph) -> Certificate {
    match min_separator(g) {
        Some(cut) => Certificate::separator(g, Stage::Setup, cut),
        None => Certificate::HypothesisFailure {
            stage: Stage::Setup,
            hypothesis: Hypothesis::Not2kConnected,
            witness: FailureWitness::Order { n: g.n() },
        },
    }
}

fn run(g: &Graph, k: usize, c: &OrientedCycle, caps: &Caps) -> Result<ReplayOutcome> {
    use ReplayOutcome::Certificate as Cert;
    if c.len() == g.n() {
        return Ok(ReplayOutcome::Hamiltonian(c.clone()));
    }
    if !g.is_connected() {
        return Ok(Cert(Certificate::separator(g, Stage::Setup, crate::graph::VertexSet::EMPTY)));
    }
    let exterior = g.vertices().difference(c.vertices());
    let mut structures = Vec::new();
    for h in g.components_within(exterior) {
        let s = AttachmentStructure::build(g, c, h, k)?;
        if let Some(cert) = claim1_check(g, c.len(), &s)? {
            return Ok(Cert(cert));
        }
        if let Some(cert) = claim2_check(g, &s, k)? {
            return Ok(Cert(cert));
        }
        structures.push(s);
    }
    if let Some(cert) = claim3_check(g, c)? {
        return Ok(Cert(cert));
    }
    let s = &structures[0];
    let arcs = match ArcDecomposition::new(s, k) {
        Ok(arcs) => arcs,
        Err(_) => return Ok(Cert(Certificate::separator(g, Stage::Claim4Anchor, s.attachment_set()))),
    };
    match claim4_scan(g, c.len(), s, &arcs, k, caps)? {
        Scan::Stop(cert) => Ok(Cert(cert)),
        Scan::Independent(y) => Ok(Cert(final_cut(g, s, y, k)?)),
    }
}
