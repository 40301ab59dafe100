//! Replay outcomes and their independent validation.

use super::construction::Construction;
use super::structure::WorkingCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamilton::{Direction, OrientedCycle};
use crate::ratio::{ratio, serialize_ratio, Rational};
use crate::structure::FreenessWitness;
use serde::{Serialize, Serializer};

/// A hypothesis of the theorem that an input fails (or, for `NTooSmall`, a
/// size condition the argument needs).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    #[serde(rename = "not-4-tough")]
    Not4Tough,
    #[serde(rename = "not-2k-connected")]
    Not2kConnected,
    NotFree,
    NTooSmall,
}

impl Hypothesis {
    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::Not4Tough => "not-4-tough",
            Hypothesis::Not2kConnected => "not-2k-connected",
            Hypothesis::NotFree => "not-free",
            Hypothesis::NTooSmall => "n-too-small",
        }
    }
}

/// Where in the argument an outcome was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Setup,
    Claim1,
    Claim2,
    Claim3,
    Claim4Anchor,
    Claim4Forced,
    Claim4Case1,
    Claim4Case2,
    Claim4Case3,
    Claim4YIndependent,
    FinalCut,
    Audit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FailureWitness {
    /// `G - cutset` is disconnected and `|cutset| < 2k`.
    Separator {
        cutset: VertexSet,
        components: usize,
        #[serde(serialize_with = "serialize_ratio")]
        ratio: Rational,
    },
    /// Too few vertices to be 2k-connected at all.
    Order {
        n: usize,
    },
    Induced {
        witness: FreenessWitness,
    },
    /// `|cutset| / components < 4`.
    Cut {
        cutset: VertexSet,
        components: usize,
        #[serde(serialize_with = "serialize_ratio")]
        ratio: Rational,
    },
    /// The final independent set is too small for the ratio to drop below 4.
    Bound {
        independent: VertexSet,
        cutset: VertexSet,
        #[serde(serialize_with = "serialize_ratio")]
        ratio: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Certificate {
    LongerCycle {
        stage: Stage,
        cycle: OrientedCycle,
        construction: Construction,
        #[serde(serialize_with = "ser_direction")]
        orientation: Direction,
        /// First vertex of the working cycle (`x_1`).
        anchor: usize,
    },
    InducedWitness {
        stage: Stage,
        hypothesis: Hypothesis,
        witness: FreenessWitness,
    },
    ToughnessCut {
        stage: Stage,
        hypothesis: Hypothesis,
        cutset: VertexSet,
        components: usize,
        #[serde(serialize_with = "serialize_ratio")]
        ratio: Rational,
    },
    IndependentCut {
        stage: Stage,
        hypothesis: Hypothesis,
        independent: VertexSet,
        cutset: VertexSet,
        #[serde(serialize_with = "serialize_ratio")]
        ratio: Rational,
    },
    HypothesisFailure {
        stage: Stage,
        hypothesis: Hypothesis,
        witness: FailureWitness,
    },
}

fn ser_direction<S: Serializer>(d: &Direction, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match d {
        Direction::Forward => "forward",
        Direction::Backward => "backward",
    })
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::LongerCycle { .. } => "longer-cycle",
            Certificate::InducedWitness { .. } => "induced-witness",
            Certificate::ToughnessCut { .. } => "toughness-cut",
            Certificate::IndependentCut { .. } => "independent-cut",
            Certificate::HypothesisFailure { .. } => "hypothesis-failure",
        }
    }

    pub fn stage(&self) -> Stage {
        match self {
            Certificate::LongerCycle { stage, .. }
            | Certificate::InducedWitness { stage, .. }
            | Certificate::ToughnessCut { stage, .. }
            | Certificate::IndependentCut { stage, .. }
            | Certificate::HypothesisFailure { stage, .. } => *stage,
        }
    }

    /// The hypothesis this certificate refutes, if any.
    pub fn hypothesis(&self) -> Option<Hypothesis> {
        match self {
            Certificate::LongerCycle { .. } => None,
            Certificate::InducedWitness { hypothesis, .. }
            | Certificate::ToughnessCut { hypothesis, .. }
            | Certificate::IndependentCut { hypothesis, .. }
            | Certificate::HypothesisFailure { hypothesis, .. } => Some(*hypothesis),
        }
    }

    pub(crate) fn induced(stage: Stage, witness: FreenessWitness) -> Self {
        Certificate::InducedWitness { stage, hypothesis: Hypothesis::NotFree, witness }
    }

    pub(crate) fn separator(g: &Graph, stage: Stage, cutset: VertexSet) -> Self {
        Certificate::HypothesisFailure {
            stage,
            hypothesis: Hypothesis::Not2kConnected,
            witness: {
                let components = g.components_after_removing(cutset);
                FailureWitness::Separator { cutset, components, ratio: ratio(cutset.len(), components.max(1)) }
            },
        }
    }
}

/// Result of a replay: either `C` is hamiltonian or a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReplayOutcome {
    Hamiltonian(OrientedCycle),
    Certificate(Certificate),
}

impl ReplayOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            ReplayOutcome::Hamiltonian(_) => "hamiltonian",
            ReplayOutcome::Certificate(c) => c.kind(),
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            ReplayOutcome::Certificate(c) => Some(c),
            ReplayOutcome::Hamiltonian(_) => None,
        }
    }
}

impl Serialize for ReplayOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(tag = "outcome", rename_all = "kebab-case")]
        enum Ham<'a> {
            Hamiltonian { cycle: &'a OrientedCycle },
        }
        match self {
            ReplayOutcome::Hamiltonian(cycle) => Ham::Hamiltonian { cycle }.serialize(s),
            ReplayOutcome::Certificate(c) => c.serialize(s),
        }
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}

fn partitions(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    a.is_disjoint(b) && a.union(b) == g.vertices()
}

fn check_cut(g: &Graph, cutset: VertexSet, components: usize, r: Rational, below: bool) -> Result<()> {
    if !cutset.is_subset(g.vertices()) {
        return fail("cutset out of range");
    }
    let c = g.components_after_removing(cutset);
    if c != components || c < 2 {
        return fail(format!("G - S has {c} components, certificate says {components}"));
    }
    if ratio(cutset.len(), c) != r {
        return fail("stated ratio does not match |S| / c(G - S)");
    }
    if below != (r < Rational::from_integer(4)) {
        return fail(format!("ratio {r} is on the wrong side of 4"));
    }
    Ok(())
}

/// Re-checks an outcome from scratch. `c` is the cycle the replay started from.
pub fn validate_outcome(g: &Graph, k: usize, c: Option<&OrientedCycle>, outcome: &ReplayOutcome) -> Result<()> {
    match outcome {
        ReplayOutcome::Hamiltonian(cycle) => {
            cycle.validate(g)?;
            if cycle.len() != g.n() {
                return fail("cycle is not hamiltonian");
            }
            Ok(())
        }
        ReplayOutcome::Certificate(cert) => validate_certificate(g, k, c, cert),
    }
}

/// Re-checks a certificate using only graph primitives.
pub fn validate_certificate(g: &Graph, k: usize, c: Option<&OrientedCycle>, cert: &Certificate) -> Result<()> {
    match cert {
        Certificate::LongerCycle { cycle, construction, orientation, anchor, .. } => {
            let Some(c) = c else {
                return fail("longer cycle without an input cycle");
            };
            cycle.validate(g)?;
            if cycle.len() <= c.len() {
                return fail(format!("cycle of length {} is not longer than {}", cycle.len(), c.len()));
            }
            let wc = WorkingCycle::new(c, *orientation, *anchor)?;
            let rebuilt = OrientedCycle::new(construction.rebuild(&wc))?;
            if &rebuilt != cycle {
                return fail(format!("{} does not rebuild to the certificate's cycle", construction.tag()));
            }
            Ok(())
        }
        Certificate::InducedWitness { hypothesis, witness, .. } => {
            if *hypothesis != Hypothesis::NotFree {
                return fail("induced witness must refute freeness");
            }
            witness.validate(g, k).map_err(Error::Validation)
        }
        Certificate::ToughnessCut { hypothesis, cutset, components, ratio, .. } => {
            if *hypothesis != Hypothesis::Not4Tough {
                return fail("toughness cut must refute 4-toughness");
            }
            check_cut(g, *cutset, *components, *ratio, true)
        }
        Certificate::IndependentCut { hypothesis, independent, cutset, ratio, .. } => {
            if *hypothesis != Hypothesis::Not4Tough {
                return fail("independent cut must refute 4-toughness");
            }
            if !g.is_independent(*independent) || !partitions(g, *independent, *cutset) {
                return fail("independent set and cutset do not partition V(G)");
            }
            check_cut(g, *cutset, independent.len(), *ratio, true)
        }
        Certificate::HypothesisFailure { hypothesis, witness, .. } => match (hypothesis, witness) {
            (Hypothesis::Not2kConnected, FailureWitness::Separator { cutset, components, ratio: r }) => {
                if cutset.len() >= 2 * k {
                    return fail(format!("separator of size {} is not below 2k = {}", cutset.len(), 2 * k));
                }
                let got = g.components_after_removing(*cutset);
                if !cutset.is_subset(g.vertices()) || got < 2 || got != *components {
                    return fail("separator does not disconnect the graph as stated");
                }
                if ratio(cutset.len(), got) != *r {
                    return fail("stated ratio does not match |S| / c(G - S)");
                }
                Ok(())
            }
            (Hypothesis::Not2kConnected, FailureWitness::Order { n }) => {
                if *n != g.n() || *n > 2 * k {
                    return fail("order witness does not rule out 2k-connectivity");
                }
                Ok(())
            }
            (Hypothesis::NotFree, FailureWitness::Induced { witness }) => {
                witness.validate(g, k).map_err(Error::Validation)
            }
            (Hypothesis::Not4Tough, FailureWitness::Cut { cutset, components, ratio }) => {
                check_cut(g, *cutset, *components, *ratio, true)
            }
            (Hypothesis::NTooSmall, FailureWitness::Bound { independent, cutset, ratio }) => {
                if !g.is_independent(*independent) || !partitions(g, *independent, *cutset) {
                    return fail("bound witness does not partition V(G)");
                }
                check_cut(g, *cutset, independent.len(), *ratio, false)
            }
            _ => fail("witness kind does not match the hypothesis"),
        },
    }
}
