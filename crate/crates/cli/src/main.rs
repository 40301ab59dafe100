//! `toughham`: single-graph checks, proof replay, corpus campaigns and graph
//! generation.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (campaigns: no verified violation) |
//! | 1 | usage error: bad flag, bad value, k < 4 where k >= 4 is required |
//! | 2 | malformed graph input |
//! | 3 | a solver cap was exceeded |
//! | 4 | internal validation failure |
//! | 5 | a campaign found a verified violation |
//! | 6 | I/O error |

mod input;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;
use toughham::graph::{complete, complete_bipartite, cycle, path, petersen, random_gnp, write_graph6, Graph};
use toughham::harness::{
    profile, run_campaign, Campaign, CampaignReport, CorpusDescriptor, Family, GraphStream, PropertyProfile,
    RunOptions, Sampler, SCHEMA,
};
use toughham::ratio::parse_ratio;
use toughham::replay::{replay_with_caps, ReplayOutcome, ReplayReport};
use toughham::{Caps, Error, Rational};

#[derive(Parser, Debug)]
#[command(name = "toughham", version, about = "Toughness, freeness and hamiltonicity of small graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Cap for every exponential solver (overrides TOUGHHAM_CAP_N)
    #[arg(long, global = true, value_name = "N")]
    cap_n: Option<usize>,
    /// Seed for random generation and sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for campaigns (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write JSONL records (campaigns) or the result to this file
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the property profile of each graph in a file (graph6 or edge list)
    Check {
        /// Freeness parameters, repeatable or comma separated
        #[arg(long, value_delimiter = ',', default_value = "4")]
        k: Vec<usize>,
        /// Input file, `-` for standard input
        input: String,
    },
    /// Replay the proof on a graph and print the resulting certificate
    Replay {
        #[arg(long)]
        k: usize,
        /// Cycle to start from instead of a computed longest cycle
        #[arg(long, value_name = "FILE")]
        cycle: Option<String>,
        input: String,
    },
    /// Run a verification campaign over a corpus
    Verify {
        #[arg(value_enum)]
        statement: Statement,
        #[arg(long)]
        k: Option<usize>,
        /// Toughness threshold for `bauer`, e.g. 1 or 3/2
        #[arg(long)]
        t: Option<String>,
        /// graph6 corpus file, repeatable
        #[arg(long, value_name = "FILE")]
        corpus: Vec<String>,
        /// Generated family, e.g. complete:9..20 or gnp:9..16:4/5,9/10:1000
        #[arg(long, value_name = "SPEC")]
        family: Vec<String>,
    },
    /// Search random dense graphs for counterexamples to the 1-tough conjecture
    Hunt {
        #[arg(long)]
        k: usize,
        /// Vertex count range LO..HI
        #[arg(long, default_value = "9..14")]
        n: String,
        /// Number of graphs to sample
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        /// Edge probabilities to sample from
        #[arg(long, value_delimiter = ',', default_value = "7/10,4/5,9/10,19/20")]
        p: Vec<String>,
    },
    /// Print a generated graph in graph6
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Statement {
    Theorem,
    Corollary,
    Bauer,
    CrossChecks,
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Petersen,
    /// G(n, p) seeded by --seed
    Gnp {
        n: usize,
        p: String,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Violations(u64),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::from(e))
    }
}

type Outcome = std::result::Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MalformedGraph6(_) | Error::MalformedEdgeList(_) | Error::TooLarge(_) => 2,
        Error::CapExceeded { .. } => 3,
        Error::Validation(_) => 4,
        Error::Io(_) => 6,
        Error::InvalidSize(_)
        | Error::EmptyGraph
        | Error::TooSmall(_)
        | Error::NotOnCycle(_)
        | Error::InvalidCycle(_)
        | Error::InvalidArgument(_)
        | Error::Precondition(_)
        | Error::BudgetExhausted => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Violations(n)) => {
            eprintln!("{n} verified violation(s) found");
            ExitCode::from(5)
        }
    }
}

fn caps(common: &Common) -> Caps {
    common.cap_n.map(Caps::uniform).unwrap_or_else(Caps::from_env)
}

fn need_k4(k: usize) -> Outcome {
    if k < 4 {
        return Err(Failure::Usage(format!("--k must be at least 4, got {k}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let common = &cli.common;
    if common.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    match &cli.command {
        Command::Check { k, input } => {
            if k.contains(&0) {
                return Err(Failure::Usage("--k must be positive".into()));
            }
            check(common, k, input)
        }
        Command::Replay { k, cycle, input } => {
            need_k4(*k)?;
            replay(common, *k, cycle.as_deref(), input)
        }
        Command::Verify { statement, k, t, corpus, family } => {
            let campaign = campaign_for(*statement, *k, t.as_deref())?;
            let families =
                family.iter().map(|f| Family::parse(f, common.seed)).collect::<toughham::Result<Vec<_>>>()?;
            if corpus.is_empty() && families.is_empty() {
                return Err(Failure::Usage("give at least one --corpus or --family".into()));
            }
            let mut streams = Vec::new();
            let mut sources = Vec::new();
            for path in corpus {
                streams.push(input::corpus_stream(path)?);
                sources.push(path.clone());
            }
            for f in &families {
                streams.push(f.stream());
                sources.push(f.describe());
            }
            let stream: GraphStream = Box::new(streams.into_iter().flatten());
            let descriptor = CorpusDescriptor { sources, filters: Vec::new(), seed: Some(common.seed) };
            campaign_run(common, &campaign, stream, descriptor, None)
        }
        Command::Hunt { k, n, budget, p } => {
            need_k4(*k)?;
            let (n_min, n_max) = toughham::harness::parse_range(n).map_err(|e| Failure::Usage(e.to_string()))?;
            let ps = p
                .iter()
                .map(|s| parse_ratio(s))
                .collect::<toughham::Result<Vec<_>>>()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            if ps.iter().any(|p| *p < Rational::from_integer(0) || *p > Rational::from_integer(1)) {
                return Err(Failure::Usage("edge probabilities must lie in [0, 1]".into()));
            }
            let sampler = Sampler { n_min, n_max, ps, seed: common.seed };
            let descriptor = CorpusDescriptor {
                sources: vec![sampler.describe(*budget)],
                filters: vec!["n>=3".into(), "2k-connected".into(), "p2kp1-free".into(), "1-tough".into()],
                seed: Some(common.seed),
            };
            campaign_run(common, &Campaign::Conjecture { k: *k }, sampler.stream(*budget), descriptor, Some(*budget))
        }
        Command::Gen { family } => gen(common, family),
    }
}

fn campaign_for(statement: Statement, k: Option<usize>, t: Option<&str>) -> std::result::Result<Campaign, Failure> {
    let need = |name: &str| Failure::Usage(format!("verify {name} needs --k"));
    let campaign = match statement {
        Statement::Theorem => {
            let k = k.ok_or_else(|| need("theorem"))?;
            need_k4(k)?;
            Campaign::Theorem { k }
        }
        Statement::Corollary => Campaign::Corollary { k: k.ok_or_else(|| need("corollary"))? },
        Statement::Bauer => {
            let t = t.ok_or_else(|| Failure::Usage("verify bauer needs --t".into()))?;
            Campaign::Bauer { t: parse_ratio(t).map_err(|e| Failure::Usage(e.to_string()))? }
        }
        Statement::CrossChecks => Campaign::CrossChecks,
    };
    campaign.check_params().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(campaign)
}

/// Standard output, or the `--output` file.
fn output(common: &Common) -> std::result::Result<Box<dyn Write + Send>, Failure> {
    Ok(match &common.output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| Error::Io(format!("{path}: {e}")))?)),
        None => Box::new(BufWriter::new(std::io::stdout())),
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> std::result::Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::Lib(Error::Io(e.to_string())))
}

#[derive(serde::Serialize)]
struct Tagged<'a, T> {
    schema: &'static str,
    record: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

fn check(common: &Common, ks: &[usize], path: &str) -> Outcome {
    let caps = caps(common);
    let graphs = input::read_graphs(path)?;
    let profiles = graphs.iter().map(|g| profile(g, ks, &caps)).collect::<toughham::Result<Vec<_>>>()?;
    let mut out = output(common)?;
    for (i, p) in profiles.iter().enumerate() {
        match common.format {
            Format::Json => writeln!(out, "{}", to_json(&Tagged { schema: SCHEMA, record: "profile", body: p })?)?,
            Format::Text => {
                if i > 0 {
                    writeln!(out)?;
                }
                write_profile(&mut out, p)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_profile(out: &mut dyn Write, p: &PropertyProfile) -> std::io::Result<()> {
    writeln!(out, "graph6        {}", p.graph6)?;
    writeln!(out, "n             {}", p.n)?;
    writeln!(out, "m             {}", p.m)?;
    match p.min_degree {
        Some(d) => writeln!(out, "min degree    {d}")?,
        None => writeln!(out, "min degree    -")?,
    }
    writeln!(out, "connectivity  {}", p.connectivity)?;
    writeln!(out, "independence  {}", p.independence)?;
    writeln!(out, "toughness     {}", p.toughness)?;
    if let Some(w) = p.toughness_witness {
        writeln!(out, "tough cut     {:?}", w.to_vec())?;
    }
    writeln!(out, "hamiltonian   {}", yes_no(p.hamiltonian))?;
    for (k, free) in &p.free {
        writeln!(out, "P2+{k}P1-free   {}", yes_no(*free))?;
    }
    Ok(())
}

fn replay(common: &Common, k: usize, cycle: Option<&str>, path: &str) -> Outcome {
    let caps = caps(common);
    let graphs = input::read_graphs(path)?;
    if graphs.len() != 1 {
        return Err(Failure::Usage(format!("replay takes one graph, {path} has {}", graphs.len())));
    }
    let g = &graphs[0];
    let c = cycle.map(|f| input::read_cycle(f, g)).transpose()?;
    let report = replay_with_caps(g, k, c.as_ref(), &caps)?;
    report.validate(g)?;
    let mut out = output(common)?;
    let tagged = Tagged { schema: SCHEMA, record: "replay", body: &report };
    match common.format {
        Format::Json => writeln!(out, "{}", to_json(&tagged)?)?,
        Format::Text => {
            writeln!(out, "{}", summarize_replay(&report))?;
            writeln!(out, "{}", to_json(&tagged)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn summarize_replay(r: &ReplayReport) -> String {
    match &r.outcome {
        ReplayOutcome::Hamiltonian(c) => format!("hamiltonian: {:?}", c.order()),
        ReplayOutcome::Certificate(cert) => {
            let mut s =
                format!("certificate: {} at {}", cert.kind(), serde_json::to_value(cert.stage()).unwrap_or_default());
            if let Some(h) = cert.hypothesis() {
                s.push_str(&format!(", hypothesis {}", h.as_str()));
            }
            s
        }
    }
}

fn campaign_run(
    common: &Common,
    campaign: &Campaign,
    stream: GraphStream,
    corpus: CorpusDescriptor,
    budget: Option<u64>,
) -> Outcome {
    let opts = RunOptions { caps: caps(common), budget, ..RunOptions::default() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    // JSONL goes to --output, or to stdout in json mode; text mode prints a summary.
    let mut sink: Option<Box<dyn Write + Send>> = match (&common.output, common.format) {
        (Some(_), _) | (None, Format::Json) => Some(output(common)?),
        (None, Format::Text) => None,
    };
    let report = pool
        .install(|| run_campaign(campaign, stream, corpus, &opts, sink.as_mut().map(|w| &mut **w as &mut dyn Write)))?;
    if let Some(mut w) = sink {
        w.flush()?;
    }
    let stdout = &mut std::io::stdout().lock();
    match (common.format, &common.output) {
        (Format::Text, _) => write_summary(stdout, &report)?,
        (Format::Json, Some(_)) => writeln!(stdout, "{}", to_json(&report)?)?,
        (Format::Json, None) => {}
    }
    stdout.flush()?;
    match report.counts.violations {
        0 => Ok(()),
        n => Err(Failure::Violations(n)),
    }
}

fn write_summary(out: &mut dyn Write, r: &CampaignReport) -> std::io::Result<()> {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    writeln!(out, "campaign      {} {}", r.campaign, params.join(" "))?;
    writeln!(out, "corpus        {}", r.corpus.sources.join(" + "))?;
    writeln!(out, "status        {}", serde_json::to_value(r.status).unwrap_or_default().as_str().unwrap_or(""))?;
    writeln!(out, "scanned       {}", r.counts.scanned)?;
    writeln!(out, "satisfying    {}", r.counts.hypothesis_satisfying)?;
    writeln!(out, "holds         {}", r.counts.conclusion_holds)?;
    writeln!(out, "violations    {}", r.counts.violations)?;
    if r.near_misses > 0 {
        writeln!(out, "near misses   {}", r.near_misses)?;
    }
    for (name, c) in &r.checks {
        writeln!(out, "check {name}: {} applicable, {} violated", c.hypothesis_satisfying, c.violations)?;
    }
    for (name, count) in &r.logged {
        writeln!(out, "logged {name}: {count}")?;
    }
    for v in &r.violation_records {
        writeln!(out, "VIOLATION {}", v.graph6)?;
    }
    writeln!(out, "wall clock    {:.0} ms", r.wall_clock_ms)
}

fn gen(common: &Common, family: &GenFamily) -> Outcome {
    let g: Graph = match family {
        GenFamily::Complete { n } => complete(*n),
        GenFamily::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        GenFamily::Cycle { n } => cycle(*n),
        GenFamily::Path { n } => path(*n),
        GenFamily::Petersen => Ok(petersen()),
        GenFamily::Gnp { n, p } => {
            let p = parse_ratio(p).map_err(|e| Failure::Usage(e.to_string()))?;
            random_gnp(*n, p, common.seed)
        }
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let mut out = output(common)?;
    match common.format {
        Format::Text => writeln!(out, "{}", write_graph6(&g))?,
        Format::Json => {
            let v = serde_json::json!({"graph6": write_graph6(&g), "n": g.n(), "m": g.edge_count()});
            writeln!(out, "{v}")?;
        }
    }
    out.flush()?;
    Ok(())
}
