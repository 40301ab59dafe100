//! Corpus campaigns: per-graph property profiles, verification of the
//! theorem-shaped statements over a corpus, and the conjecture hunt. Work is
//! spread over the current rayon pool; output order always follows input order.

mod campaign;
mod corpus;
mod profile;

pub use campaign::{
    run_campaign, Campaign, CampaignReport, CheckStatus, Counts, GraphRecord, RunOptions, RunStatus, Status, SCHEMA,
};
pub use corpus::{derive_seed, parse_range, read_graph6, CorpusDescriptor, Family, GraphStream, Sampler};
pub use profile::{profile, PropertyProfile};

use crate::error::Result;
use crate::ratio::Rational;
use std::io::Write;

pub fn verify_theorem(
    stream: GraphStream,
    corpus: CorpusDescriptor,
    k: usize,
    opts: &RunOptions,
    sink: Option<&mut dyn Write>,
) -> Result<CampaignReport> {
    run_campaign(&Campaign::Theorem { k }, stream, corpus, opts, sink)
}

pub fn verify_corollary(
    stream: GraphStream,
    corpus: CorpusDescriptor,
    k: usize,
    opts: &RunOptions,
    sink: Option<&mut dyn Write>,
) -> Result<CampaignReport> {
    run_campaign(&Campaign::Corollary { k }, stream, corpus, opts, sink)
}

pub fn verify_bauer(
    stream: GraphStream,
    corpus: CorpusDescriptor,
    t: Rational,
    opts: &RunOptions,
    sink: Option<&mut dyn Write>,
) -> Result<CampaignReport> {
    run_campaign(&Campaign::Bauer { t }, stream, corpus, opts, sink)
}

pub fn cross_checks(
    stream: GraphStream,
    corpus: CorpusDescriptor,
    opts: &RunOptions,
    sink: Option<&mut dyn Write>,
) -> Result<CampaignReport> {
    run_campaign(&Campaign::CrossChecks, stream, corpus, opts, sink)
}

/// Samples `budget` random graphs from `sampler` and runs the conjecture
/// campaign on them. Always ends with status `budget-exhausted`.
pub fn hunt_conjecture(
    sampler: &Sampler,
    k: usize,
    budget: u64,
    opts: &RunOptions,
    sink: Option<&mut dyn Write>,
) -> Result<CampaignReport> {
    let corpus = CorpusDescriptor {
        sources: vec![sampler.describe(budget)],
        filters: vec!["n>=3".into(), "2k-connected".into(), "p2kp1-free".into(), "1-tough".into()],
        seed: Some(sampler.seed),
    };
    let opts = RunOptions { budget: Some(budget), ..opts.clone() };
    run_campaign(&Campaign::Conjecture { k }, sampler.stream(budget), corpus, &opts, sink)
}
