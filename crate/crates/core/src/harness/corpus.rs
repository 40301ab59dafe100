//! Graph sources for campaigns: graph6 streams and seeded generator families.

use crate::error::{Error, Result};
use crate::graph::{complete, parse_graph6, random_gnp, Graph};
use crate::ratio::{format_ratio, parse_ratio, Rational};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::io::BufRead;

pub type GraphStream = Box<dyn Iterator<Item = Result<Graph>> + Send>;

/// Parses a graph6 stream line by line. Blank lines are skipped; the optional
/// `>>graph6<<` header is accepted on any line.
pub fn read_graph6<R: BufRead + Send + 'static>(reader: R) -> GraphStream {
    Box::new(reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(Error::from(e))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(l.trim_end().as_bytes()).map_err(|e| match e {
            Error::MalformedGraph6(m) => Error::MalformedGraph6(format!("line {}: {m}", i + 1)),
            other => other,
        })),
    }))
}

/// A 64-bit seed for item `index` of a stream seeded with `seed` (splitmix64).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random graphs: for sample `i`, `n` and `p` are drawn uniformly from the
/// given ranges with a generator seeded by `derive_seed(seed, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampler {
    pub n_min: usize,
    pub n_max: usize,
    pub ps: Vec<Rational>,
    pub seed: u64,
}

impl Sampler {
    pub fn sample(&self, i: u64) -> Result<Graph> {
        let s = derive_seed(self.seed, i);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let span = (self.n_max - self.n_min + 1) as u64;
        let n = self.n_min + (rng.next_u64() % span) as usize;
        let p = self.ps[(rng.next_u64() % self.ps.len() as u64) as usize];
        random_gnp(n, p, rng.next_u64())
    }

    pub fn stream(&self, count: u64) -> GraphStream {
        let me = self.clone();
        Box::new((0..count).map(move |i| me.sample(i)))
    }

    pub fn describe(&self, count: u64) -> String {
        let ps: Vec<String> = self.ps.iter().map(format_ratio).collect();
        format!("gnp:{}..{}:{}:{}", self.n_min, self.n_max, ps.join(","), count)
    }
}

/// A generated family, written `complete:LO..HI` or `gnp:LO..HI:P1,P2,..:COUNT`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete { lo: usize, hi: usize },
    Gnp { sampler: Sampler, count: u64 },
}

pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidArgument(format!("bad range {s:?}, expected LO..HI"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi || hi > 64 {
        return Err(bad());
    }
    Ok((lo, hi))
}

impl Family {
    /// Parses a family spec; `seed` seeds random families.
    pub fn parse(spec: &str, seed: u64) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown family {spec:?}"));
        let parts: Vec<&str> = spec.split(':').collect();
        match parts[..] {
            ["complete", range] => {
                let (lo, hi) = parse_range(range)?;
                Ok(Family::Complete { lo, hi })
            }
            ["gnp", range, ps, count] => {
                let (n_min, n_max) = parse_range(range)?;
                let ps = ps.split(',').map(parse_ratio).collect::<Result<Vec<_>>>()?;
                if ps.is_empty() || ps.iter().any(|p| *p < Rational::from_integer(0) || *p > Rational::from_integer(1))
                {
                    return Err(bad());
                }
                let count = count.parse().map_err(|_| bad())?;
                Ok(Family::Gnp { sampler: Sampler { n_min, n_max, ps, seed }, count })
            }
            _ => Err(bad()),
        }
    }

    pub fn stream(&self) -> GraphStream {
        match self {
            Family::Complete { lo, hi } => Box::new((*lo..=*hi).map(complete)),
            Family::Gnp { sampler, count } => sampler.stream(*count),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Family::Complete { lo, hi } => format!("complete:{lo}..{hi}"),
            Family::Gnp { sampler, count } => sampler.describe(*count),
        }
    }
}

/// Where a campaign's graphs came from, as recorded in its report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusDescriptor {
    pub sources: Vec<String>,
    pub filters: Vec<String>,
    pub seed: Option<u64>,
}
