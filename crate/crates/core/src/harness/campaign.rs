use super::corpus::{CorpusDescriptor, GraphStream};
use super::profile::{profile, PropertyProfile};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, write_graph6, Graph};
use crate::hamilton::{count_hamiltonian_cycles, hamiltonian_cycle, hamiltonian_cycle_dp};
use crate::oracle;
use crate::ratio::{format_ratio, Rational, Toughness};
use crate::replay::{replay_with_caps, ReplayReport};
use crate::structure::{
    find_induced, find_toughness_violation, is_k_connected, is_p2kp1_free, min_degree, p2kp1_pattern,
    toughness_with_cap,
};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

pub const SCHEMA: &str = "toughham/1";

/// What a campaign checks on each graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Campaign {
    /// 4-tough, 2k-connected and (P2 ∪ kP1)-free on at least 3 vertices ⇒ hamiltonian.
    Theorem { k: usize },
    /// k-tough and (P2 ∪ kP1)-free on at least 3 vertices ⇒ hamiltonian.
    Corollary { k: usize },
    /// t-tough with δ > n/(t+1) - 1 on at least 3 vertices ⇒ hamiltonian.
    Bauer { t: Rational },
    /// 1-tough, 2k-connected and (P2 ∪ kP1)-free ⇒ hamiltonian (open).
    Conjecture { k: usize },
    /// The basic facts tying toughness, connectivity, independence and
    /// hamiltonicity together, plus the freeness oracle for k <= 3.
    CrossChecks,
}

impl Campaign {
    pub fn name(&self) -> &'static str {
        match self {
            Campaign::Theorem { .. } => "theorem",
            Campaign::Corollary { .. } => "corollary",
            Campaign::Bauer { .. } => "bauer",
            Campaign::Conjecture { .. } => "conjecture",
            Campaign::CrossChecks => "cross-checks",
        }
    }

    fn params(&self) -> BTreeMap<&'static str, String> {
        match self {
            Campaign::Theorem { k } | Campaign::Corollary { k } | Campaign::Conjecture { k } => {
                BTreeMap::from([("k", k.to_string())])
            }
            Campaign::Bauer { t } => BTreeMap::from([("t", format_ratio(t))]),
            Campaign::CrossChecks => BTreeMap::new(),
        }
    }

    pub fn check_params(&self) -> Result<()> {
        match *self {
            Campaign::Theorem { k } | Campaign::Conjecture { k } if k < 4 => {
                Err(Error::InvalidArgument(format!("k must be at least 4, got {k}")))
            }
            Campaign::Corollary { k } if k < 1 => Err(Error::InvalidArgument("k must be at least 1".into())),
            Campaign::Bauer { t } if t <= Rational::from_integer(0) => {
                Err(Error::InvalidArgument(format!("t must be positive, got {t}")))
            }
            _ => Ok(()),
        }
    }

    fn replay_k(&self) -> Option<usize> {
        match *self {
            Campaign::Theorem { k } | Campaign::Corollary { k } | Campaign::Conjecture { k } if k >= 4 => Some(k),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Some hypothesis fails.
    Filtered,
    /// Hypotheses hold and so does the conclusion.
    Holds,
    /// A re-verified violation.
    Violation,
    /// Non-hamiltonian and failing exactly one hypothesis.
    NearMiss,
    /// Cross-checks ran with no violation.
    Checked,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Holds,
    Violated,
    NotApplicable,
}

/// One JSONL line per scanned graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    pub schema: &'static str,
    pub record: &'static str,
    pub campaign: &'static str,
    pub index: u64,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub status: Status,
    /// Failing hypotheses. Filters stop at the first failure except in the
    /// conjecture hunt, which evaluates all of them.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<BTreeMap<&'static str, CheckStatus>>,
    /// κ >= 2⌈τ⌉ taken literally, for non-complete graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ceiling_literal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<PropertyProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<ReplayReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay_error: Option<String>,
    /// Independent recomputations that confirmed a violation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reverified: Option<u8>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub scanned: u64,
    pub hypothesis_satisfying: u64,
    pub conclusion_holds: u64,
    pub violations: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunStatus {
    Complete,
    BudgetExhausted,
}

/// The summary written as the last JSONL line.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub schema: &'static str,
    pub record: &'static str,
    pub campaign: &'static str,
    pub params: BTreeMap<&'static str, String>,
    pub corpus: CorpusDescriptor,
    pub status: RunStatus,
    pub counts: Counts,
    /// Per-check counts (cross-checks only).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub checks: BTreeMap<&'static str, Counts>,
    /// Observations that are recorded but not failed on.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub logged: BTreeMap<&'static str, u64>,
    pub near_misses: u64,
    pub violation_records: Vec<GraphRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub near_miss_records: Vec<GraphRecord>,
    pub wall_clock_ms: f64,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub caps: Caps,
    /// Graphs handed to the worker pool at a time.
    pub chunk: usize,
    /// Stop after this many graphs and report `budget-exhausted`.
    pub budget: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { caps: Caps::default(), chunk: 512, budget: None }
    }
}

const N3: &str = "n>=3";
const CONNECTED: &str = "2k-connected";
const FREE: &str = "p2kp1-free";
const MIN_DEGREE: &str = "min-degree";

fn tough_name(c: &Campaign) -> &'static str {
    match c {
        Campaign::Theorem { .. } => "4-tough",
        Campaign::Corollary { .. } => "k-tough",
        Campaign::Bauer { .. } => "t-tough",
        _ => "1-tough",
    }
}

fn tough_threshold(c: &Campaign) -> Rational {
    match *c {
        Campaign::Theorem { .. } => Rational::from_integer(4),
        Campaign::Corollary { k } => Rational::from_integer(k as i64),
        Campaign::Bauer { t } => t,
        _ => Rational::from_integer(1),
    }
}

/// `δ > n/(t+1) - 1`, exactly.
fn bauer_degree(n: usize, delta: usize, t: Rational) -> bool {
    Rational::from_integer(delta as i64 + 1) * (t + 1) > Rational::from_integer(n as i64)
}

/// Invariants needed to judge a graph, computed in one go (for re-verification).
#[derive(Clone, Debug, PartialEq)]
struct Facts {
    n: usize,
    delta: usize,
    kappa: usize,
    tau: Toughness,
    free: bool,
    hamiltonian: bool,
}

fn judge(c: &Campaign, f: &Facts) -> Vec<&'static str> {
    let mut failed = Vec::new();
    if f.n < 3 {
        failed.push(N3);
    }
    match *c {
        Campaign::Theorem { k } | Campaign::Conjecture { k } => {
            if f.kappa < 2 * k {
                failed.push(CONNECTED);
            }
            if !f.free {
                failed.push(FREE);
            }
        }
        Campaign::Corollary { .. } => {
            if !f.free {
                failed.push(FREE);
            }
        }
        Campaign::Bauer { t } => {
            if !bauer_degree(f.n, f.delta, t) {
                failed.push(MIN_DEGREE);
            }
        }
        Campaign::CrossChecks => {}
    }
    if !f.tau.at_least(tough_threshold(c)) {
        failed.push(tough_name(c));
    }
    failed
}

fn freeness_k(c: &Campaign) -> usize {
    match *c {
        Campaign::Theorem { k } | Campaign::Corollary { k } | Campaign::Conjecture { k } => k,
        _ => 1,
    }
}

/// Hamiltonicity through the subset DP where it fits, else backtracking.
fn hamiltonian_alt(g: &Graph) -> Result<bool> {
    Ok(match g.n() {
        0..=2 => false,
        3..=9 => oracle::is_hamiltonian(g),
        10..=20 => count_hamiltonian_cycles(g, 20)? > 0,
        21..=24 => hamiltonian_cycle_dp(g, 24)?.is_some(),
        _ => hamiltonian_cycle(g)?.is_some(),
    })
}

/// Facts from the brute-force oracles (production toughness beyond n = 22).
fn oracle_facts(g: &Graph, k: usize, caps: &Caps) -> Result<Facts> {
    let tau = if g.n() == 0 {
        Toughness::Infinite
    } else if g.n() <= 22 {
        oracle::toughness(g).0
    } else {
        toughness_with_cap(g, caps.toughness)?.value
    };
    Ok(Facts {
        n: g.n(),
        delta: min_degree(g).unwrap_or(0),
        kappa: oracle::vertex_connectivity(g),
        tau,
        free: !oracle::has_induced_p2_kp1(g, k),
        hamiltonian: hamiltonian_alt(g)?,
    })
}

/// Facts from the production solvers on a graph re-read from its graph6 code.
fn reparsed_facts(g: &Graph, k: usize, caps: &Caps) -> Result<Facts> {
    let g = parse_graph6(write_graph6(g).as_bytes())?;
    let p = profile(&g, &[k], caps)?;
    Ok(Facts {
        n: p.n,
        delta: p.min_degree.unwrap_or(0),
        kappa: p.connectivity,
        tau: p.toughness,
        free: p.free[&k],
        hamiltonian: p.hamiltonian,
    })
}

/// Confirms a violation twice; a disagreement is an internal error.
fn reverify(c: &Campaign, g: &Graph, caps: &Caps) -> Result<u8> {
    let k = freeness_k(c);
    for facts in [oracle_facts(g, k, caps)?, reparsed_facts(g, k, caps)?] {
        if !judge(c, &facts).is_empty() || facts.hamiltonian {
            return Err(Error::Validation(format!(
                "{} violation on {} did not survive re-verification",
                c.name(),
                write_graph6(g)
            )));
        }
    }
    Ok(2)
}

fn base_record(c: &Campaign, index: u64, g: &Graph, status: Status) -> GraphRecord {
    GraphRecord {
        schema: SCHEMA,
        record: "graph",
        campaign: c.name(),
        index,
        graph6: write_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        status,
        failed: Vec::new(),
        hamiltonian: None,
        checks: None,
        ceiling_literal: None,
        profile: None,
        replay: None,
        replay_error: None,
        reverified: None,
    }
}

/// The first failing hypothesis, cheapest test first.
fn first_failure(c: &Campaign, g: &Graph, caps: &Caps) -> Result<Option<&'static str>> {
    let n = g.n();
    if n < 3 {
        return Ok(Some(N3));
    }
    let delta = min_degree(g)?;
    match *c {
        Campaign::Theorem { k } => {
            if delta < 2 * k || !is_k_connected(g, 2 * k) {
                return Ok(Some(CONNECTED));
            }
            if !is_p2kp1_free(g, k)? {
                return Ok(Some(FREE));
            }
        }
        Campaign::Corollary { k } => {
            if !is_p2kp1_free(g, k)? {
                return Ok(Some(FREE));
            }
        }
        Campaign::Bauer { t } => {
            if !bauer_degree(n, delta, t) {
                return Ok(Some(MIN_DEGREE));
            }
        }
        _ => unreachable!("evaluated elsewhere"),
    }
    let tough = find_toughness_violation(g, tough_threshold(c), caps.toughness)?.is_tough();
    Ok(if tough { None } else { Some(tough_name(c)) })
}

fn attach_violation(c: &Campaign, g: &Graph, rec: &mut GraphRecord, caps: &Caps) -> Result<()> {
    rec.reverified = Some(reverify(c, g, caps)?);
    rec.profile = Some(profile(g, &[freeness_k(c)], caps)?);
    if let Some(k) = c.replay_k() {
        match replay_with_caps(g, k, None, caps) {
            Ok(r) => rec.replay = Some(r),
            Err(e) => rec.replay_error = Some(e.to_string()),
        }
    }
    Ok(())
}

fn evaluate_filtered(c: &Campaign, index: u64, g: &Graph, caps: &Caps) -> Result<GraphRecord> {
    if let Some(f) = first_failure(c, g, caps)? {
        let mut rec = base_record(c, index, g, Status::Filtered);
        rec.failed.push(f);
        return Ok(rec);
    }
    let ham = hamiltonian_cycle(g)?.is_some();
    let mut rec = base_record(c, index, g, if ham { Status::Holds } else { Status::Violation });
    rec.hamiltonian = Some(ham);
    if !ham {
        attach_violation(c, g, &mut rec, caps)?;
    }
    Ok(rec)
}

fn evaluate_conjecture(c: &Campaign, k: usize, index: u64, g: &Graph, caps: &Caps) -> Result<GraphRecord> {
    let mut failed = Vec::new();
    if g.n() < 3 {
        failed.push(N3);
    }
    if !is_k_connected(g, 2 * k) {
        failed.push(CONNECTED);
    }
    if !is_p2kp1_free(g, k)? {
        failed.push(FREE);
    }
    if g.n() > 0 && !find_toughness_violation(g, Rational::from_integer(1), caps.toughness)?.is_tough() {
        failed.push(tough_name(c));
    }
    if failed.len() >= 2 {
        let mut rec = base_record(c, index, g, Status::Filtered);
        rec.failed = failed;
        return Ok(rec);
    }
    let ham = g.n() >= 3 && hamiltonian_cycle(g)?.is_some();
    let status = match (failed.is_empty(), ham) {
        (true, true) => Status::Holds,
        (true, false) => Status::Violation,
        (false, false) => Status::NearMiss,
        (false, true) => Status::Filtered,
    };
    let mut rec = base_record(c, index, g, status);
    rec.failed = failed;
    rec.hamiltonian = Some(ham);
    match status {
        Status::Violation => attach_violation(c, g, &mut rec, caps)?,
        Status::NearMiss => rec.profile = Some(profile(g, &[k], caps)?),
        _ => {}
    }
    Ok(rec)
}

const CHECK_HAM_TOUGH: &str = "hamiltonian-implies-1-tough";
const CHECK_CEILING: &str = "toughness-bounds-connectivity";
const CHECK_CE: &str = "chvatal-erdos";
const CHECK_FREE: &str = "freeness-oracle";

fn check_status(applicable: bool, holds: bool) -> CheckStatus {
    match (applicable, holds) {
        (false, _) => CheckStatus::NotApplicable,
        (true, true) => CheckStatus::Holds,
        (true, false) => CheckStatus::Violated,
    }
}

struct CrossFacts {
    n: usize,
    complete: bool,
    kappa: usize,
    alpha: usize,
    tau: Toughness,
    hamiltonian: bool,
    /// specialized freeness, generic oracle, for k = 1..=3
    free: Vec<(bool, bool)>,
}

fn cross_judge(f: &CrossFacts) -> (BTreeMap<&'static str, CheckStatus>, Option<bool>) {
    let one = Rational::from_integer(1);
    let mut checks = BTreeMap::new();
    checks.insert(CHECK_HAM_TOUGH, check_status(f.hamiltonian, f.tau.at_least(one)));
    // κ >= 2τ, i.e. the graph is ⌈2τ⌉-connected
    let bound = f.tau.finite().map(|t| Rational::from_integer(f.kappa as i64) >= t * 2);
    checks.insert(CHECK_CEILING, check_status(!f.complete, bound.unwrap_or(true)));
    checks.insert(CHECK_CE, check_status(f.n >= 3 && f.kappa >= f.alpha, f.hamiltonian));
    checks.insert(CHECK_FREE, check_status(true, f.free.iter().all(|(a, b)| a == b)));
    let literal = f.tau.finite().filter(|_| !f.complete).map(|t| f.kappa as i64 >= 2 * t.ceil().to_integer());
    (checks, literal)
}

fn cross_facts_from_profile(g: &Graph, p: &PropertyProfile) -> CrossFacts {
    let free = (1..=3)
        .map(|k| {
            let generic = find_induced(g, &p2kp1_pattern(k).expect("small pattern")).is_none();
            (p.free[&k], generic)
        })
        .collect();
    CrossFacts {
        n: p.n,
        complete: g.is_complete(),
        kappa: p.connectivity,
        alpha: p.independence,
        tau: p.toughness,
        hamiltonian: p.hamiltonian,
        free,
    }
}

fn evaluate_cross(c: &Campaign, index: u64, g: &Graph, caps: &Caps) -> Result<GraphRecord> {
    let p = profile(g, &[1, 2, 3], caps)?;
    let (checks, literal) = cross_judge(&cross_facts_from_profile(g, &p));
    let violated = checks.values().any(|s| *s == CheckStatus::Violated);
    let mut rec = base_record(c, index, g, if violated { Status::Violation } else { Status::Checked });
    rec.hamiltonian = Some(p.hamiltonian);
    rec.ceiling_literal = literal;
    rec.checks = Some(checks.clone());
    if violated {
        // both recomputations must reproduce the violated checks
        let reparsed = parse_graph6(write_graph6(g).as_bytes())?;
        let alt = CrossFacts {
            n: g.n(),
            complete: g.is_complete(),
            kappa: oracle::vertex_connectivity(g),
            alpha: oracle::independence_number(g),
            tau: if g.n() == 0 { Toughness::Infinite } else { oracle::toughness(g).0 },
            hamiltonian: hamiltonian_alt(g)?,
            free: (1..=3).map(|k| (is_p2kp1_free(g, k).unwrap_or(false), !oracle::has_induced_p2_kp1(g, k))).collect(),
        };
        let again = cross_facts_from_profile(&reparsed, &profile(&reparsed, &[1, 2, 3], caps)?);
        for facts in [alt, again] {
            if cross_judge(&facts).0 != checks {
                return Err(Error::Validation(format!(
                    "cross-check violation on {} did not survive re-verification",
                    write_graph6(g)
                )));
            }
        }
        rec.reverified = Some(2);
        rec.profile = Some(p);
    }
    Ok(rec)
}

fn evaluate(c: &Campaign, index: u64, g: &Graph, caps: &Caps) -> Result<GraphRecord> {
    match *c {
        Campaign::CrossChecks => evaluate_cross(c, index, g, caps),
        Campaign::Conjecture { k } => evaluate_conjecture(c, k, index, g, caps),
        _ => evaluate_filtered(c, index, g, caps),
    }
}

fn write_line<T: Serialize>(sink: &mut Option<&mut dyn Write>, value: &T) -> Result<()> {
    if let Some(w) = sink {
        serde_json::to_writer(&mut **w, value).map_err(|e| Error::Io(e.to_string()))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// Runs `campaign` over `stream` on the current rayon pool. Graph records and
/// the final summary are written to `sink` as JSONL, in input order.
pub fn run_campaign(
    campaign: &Campaign,
    stream: GraphStream,
    corpus: CorpusDescriptor,
    opts: &RunOptions,
    mut sink: Option<&mut dyn Write>,
) -> Result<CampaignReport> {
    campaign.check_params()?;
    let start = Instant::now();
    let mut report = CampaignReport {
        schema: SCHEMA,
        record: "summary",
        campaign: campaign.name(),
        params: campaign.params(),
        corpus,
        status: RunStatus::Complete,
        counts: Counts::default(),
        checks: BTreeMap::new(),
        logged: BTreeMap::new(),
        near_misses: 0,
        violation_records: Vec::new(),
        near_miss_records: Vec::new(),
        wall_clock_ms: 0.0,
    };
    let limit = opts.budget.unwrap_or(u64::MAX);
    let mut stream = stream.take(usize::try_from(limit).unwrap_or(usize::MAX));
    let mut index = 0u64;
    loop {
        let mut chunk = Vec::with_capacity(opts.chunk);
        let mut pending_err = None;
        for item in stream.by_ref().take(opts.chunk.max(1)) {
            match item {
                Ok(g) => chunk.push(g),
                Err(e) => {
                    pending_err = Some(e);
                    break;
                }
            }
        }
        if chunk.is_empty() && pending_err.is_none() {
            break;
        }
        let base = index;
        let records: Vec<Result<GraphRecord>> =
            chunk.par_iter().enumerate().map(|(i, g)| evaluate(campaign, base + i as u64, g, &opts.caps)).collect();
        index += chunk.len() as u64;
        for rec in records {
            let rec = rec?;
            tally(&mut report, &rec);
            write_line(&mut sink, &rec)?;
        }
        if let Some(e) = pending_err {
            return Err(e);
        }
    }
    if opts.budget.is_some_and(|b| report.counts.scanned >= b) {
        report.status = RunStatus::BudgetExhausted;
    }
    report.wall_clock_ms = start.elapsed().as_secs_f64() * 1e3;
    write_line(&mut sink, &report)?;
    Ok(report)
}

fn tally(report: &mut CampaignReport, rec: &GraphRecord) {
    let counts = &mut report.counts;
    counts.scanned += 1;
    if let Some(checks) = &rec.checks {
        for (name, status) in checks {
            let c = report.checks.entry(name).or_default();
            c.scanned += 1;
            match status {
                CheckStatus::Holds => {
                    c.hypothesis_satisfying += 1;
                    c.conclusion_holds += 1;
                    counts.hypothesis_satisfying += 1;
                    counts.conclusion_holds += 1;
                }
                CheckStatus::Violated => {
                    c.hypothesis_satisfying += 1;
                    c.violations += 1;
                    counts.hypothesis_satisfying += 1;
                    counts.violations += 1;
                }
                CheckStatus::NotApplicable => {}
            }
        }
        if rec.ceiling_literal == Some(false) {
            *report.logged.entry("ceiling-literal-fails").or_default() += 1;
        }
        if rec.status == Status::Violation {
            report.violation_records.push(rec.clone());
        }
        return;
    }
    match rec.status {
        Status::Holds => {
            counts.hypothesis_satisfying += 1;
            counts.conclusion_holds += 1;
        }
        Status::Violation => {
            counts.hypothesis_satisfying += 1;
            counts.violations += 1;
            report.violation_records.push(rec.clone());
        }
        Status::NearMiss => {
            report.near_misses += 1;
            report.near_miss_records.push(rec.clone());
        }
        Status::Filtered | Status::Checked => {}
    }
    for f in &rec.failed {
        *report.logged.entry(f).or_default() += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn run(c: &Campaign, graphs: Vec<Graph>) -> CampaignReport {
        let stream: GraphStream = Box::new(graphs.into_iter().map(Ok));
        run_campaign(c, stream, CorpusDescriptor::default(), &RunOptions::default(), None).unwrap()
    }

    #[test]
    fn theorem_on_named_graphs() {
        let complete: Vec<Graph> = (9..=20).map(|n| complete(n).unwrap()).collect();
        let r = run(&Campaign::Theorem { k: 4 }, complete);
        assert_eq!((r.counts.scanned, r.counts.hypothesis_satisfying, r.counts.violations), (12, 12, 0));

        let r = run(&Campaign::Theorem { k: 4 }, vec![complete_bipartite(8, 9).unwrap()]);
        assert_eq!((r.counts.hypothesis_satisfying, r.counts.violations), (0, 0));
        assert_eq!(r.logged.get("4-tough"), Some(&1));
    }

    #[test]
    fn bauer_boundary() {
        let r = run(&Campaign::Bauer { t: Rational::from_integer(1) }, vec![cycle(6).unwrap()]);
        assert_eq!(r.logged.get("min-degree"), Some(&1));
        let r = run(&Campaign::Bauer { t: Rational::from_integer(2) }, vec![complete(4).unwrap()]);
        assert_eq!((r.counts.hypothesis_satisfying, r.counts.conclusion_holds), (1, 1));
    }

    #[test]
    fn conjecture_near_miss() {
        let r = run(&Campaign::Conjecture { k: 4 }, vec![complete_bipartite(8, 9).unwrap()]);
        assert_eq!(r.near_misses, 1);
        assert_eq!(r.near_miss_records[0].failed, vec!["1-tough"]);
        assert_eq!(r.counts.violations, 0);
    }

    #[test]
    fn cross_checks_log_the_literal_ceiling() {
        let r = run(&Campaign::CrossChecks, vec![petersen(), complete(5).unwrap()]);
        assert_eq!(r.counts.violations, 0);
        assert_eq!(r.logged.get("ceiling-literal-fails"), Some(&1));
        assert_eq!(r.checks[CHECK_CEILING].hypothesis_satisfying, 1);
    }

    #[test]
    fn budget() {
        let stream: GraphStream = Box::new(std::iter::repeat_with(|| complete(5)));
        let opts = RunOptions { budget: Some(0), ..RunOptions::default() };
        let r = run_campaign(&Campaign::Conjecture { k: 4 }, stream, CorpusDescriptor::default(), &opts, None).unwrap();
        assert_eq!((r.status, r.counts.scanned), (RunStatus::BudgetExhausted, 0));
        assert!(Campaign::Theorem { k: 3 }.check_params().is_err());
    }
}
