//! Exact rationals for toughness ratios. Comparisons never go through floats.

use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

pub type Rational = num_rational::Ratio<i64>;

/// `a / b` reduced. Panics on a zero denominator.
pub fn ratio(a: usize, b: usize) -> Rational {
    Rational::new(a as i64, b as i64)
}

/// Always `p/q`, including integers (`1/1`).
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, a plain integer, or a finite decimal such as `0.75`.
pub fn parse_ratio(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let mag = int.abs() * scale + frac;
        return Ok(Rational::new(if negative { -mag } else { mag }, scale));
    }
    s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

/// Toughness value: an exact rational, or infinity for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Toughness::Infinite)
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            Toughness::Finite(r) => Some(*r),
            Toughness::Infinite => None,
        }
    }

    /// `self >= t`.
    pub fn at_least(&self, t: Rational) -> bool {
        match self {
            Toughness::Finite(r) => *r >= t,
            Toughness::Infinite => true,
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
            (Toughness::Infinite, _) => Ordering::Greater,
            (_, Toughness::Infinite) => Ordering::Less,
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => f.write_str(&format_ratio(r)),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Serializes a [`Rational`] as `"p/q"`.
pub fn serialize_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_ratio(r))
}
