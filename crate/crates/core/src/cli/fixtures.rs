//! Line-oriented fixture files of published sequence prefixes.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::counting::{count, length_sequence, MultigradedTable};
use crate::{Error, Regime, Result};

/// The fixtures shipped with the crate.
pub const EMBEDDED: &str = include_str!("../../fixtures/sequences.txt");

/// What a fixture row's terms index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    /// Length-graded terms starting at index `offset`; see [`length_terms`].
    Length { ell: u32, offset: usize },
    /// `a(r; k)` for `k = 0, 1, ...`, one operator.
    DegreeRow { r: u32 },
    /// The single count `a(r; s)`.
    Single { r: u32, s: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub sequence_id: String,
    pub regime: Regime,
    pub d: usize,
    pub kind: FixtureKind,
    pub terms: Vec<BigUint>,
    /// 1-based line number in the source file.
    pub line: usize,
}

impl fmt::Display for FixtureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} d={}", self.sequence_id, self.regime.tag(), self.d)?;
        match &self.kind {
            FixtureKind::Length { ell, offset } => write!(f, " ell={ell} offset={offset}"),
            FixtureKind::DegreeRow { r } => write!(f, " r={r}"),
            FixtureKind::Single { r, s } => {
                let s: Vec<String> = s.iter().map(u32::to_string).collect();
                write!(f, " r={r} s=({})", s.join(","))
            }
        }
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureEntry>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_line(line, k + 1)?);
    }
    Ok(out)
}

fn parse_line(line: &str, number: usize) -> Result<FixtureEntry> {
    let err = |msg: String| Error::Fixture { line: number, msg };
    let (head, tail) = line
        .split_once(':')
        .ok_or_else(|| err("missing ':'".into()))?;
    let fields: Vec<&str> = head.split_whitespace().collect();
    let [id, regime, d, ell, offset] = fields[..] else {
        return Err(err(format!(
            "expected 5 fields before ':', found {}",
            fields.len()
        )));
    };
    let regime: Regime = regime
        .parse()
        .map_err(|_| err(format!("unknown regime {regime:?}")))?;
    let d: usize = d
        .parse()
        .ok()
        .filter(|&d| d >= 1)
        .ok_or_else(|| err(format!("bad d {d:?}")))?;
    let kind = if let Some(rest) = offset.strip_prefix("r=") {
        if ell != "-" {
            return Err(err("multigraded rows take '-' for ell".into()));
        }
        match rest.split_once(";s=") {
            None => {
                if d != 1 {
                    return Err(err("degree rows need d = 1".into()));
                }
                FixtureKind::DegreeRow {
                    r: parse_positive(rest).ok_or_else(|| err(format!("bad r {rest:?}")))?,
                }
            }
            Some((r, s)) => {
                let r = parse_positive(r).ok_or_else(|| err(format!("bad r {r:?}")))?;
                let s: Vec<u32> = s
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .map_err(|_| err(format!("bad multiplicity {x:?}")))
                    })
                    .collect::<Result<_>>()?;
                if s.len() != d {
                    return Err(err(format!(
                        "multiplicity vector has {} entries, d = {d}",
                        s.len()
                    )));
                }
                FixtureKind::Single { r, s }
            }
        }
    } else {
        let ell = parse_positive(ell).ok_or_else(|| err(format!("bad ell {ell:?}")))?;
        let offset = offset
            .parse()
            .map_err(|_| err(format!("bad offset {offset:?}")))?;
        FixtureKind::Length { ell, offset }
    };
    let terms: Vec<BigUint> = tail
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| err(format!("bad term {:?}", t.trim())))
        })
        .collect::<Result<_>>()?;
    if let FixtureKind::Single { .. } = kind {
        if terms.len() != 1 {
            return Err(err("single-count rows take exactly one term".into()));
        }
    }
    Ok(FixtureEntry {
        sequence_id: id.to_string(),
        regime,
        d,
        kind,
        terms,
        line: number,
    })
}

fn parse_positive(s: &str) -> Option<u32> {
    s.parse().ok().filter(|&x| x >= 1)
}

/// `count` tabulated terms starting at index `offset`: `b(k)` for odd `ell`,
/// `b(2k)` for even `ell`, and 1 (the empty object) at index 0.
pub fn length_terms(
    regime: Regime,
    d: usize,
    ell: u32,
    offset: usize,
    count: usize,
) -> Vec<BigUint> {
    let last = offset + count;
    let stride = if ell.is_multiple_of(2) { 2 } else { 1 };
    let seq = length_sequence(regime, d, ell, stride * last.max(1));
    (offset..last)
        .map(|k| {
            if k == 0 {
                BigUint::one()
            } else {
                seq.get(stride * k).clone()
            }
        })
        .collect()
}

/// Recomputes the terms an entry lists.
pub fn recompute(entry: &FixtureEntry) -> Vec<BigUint> {
    let n = entry.terms.len();
    match &entry.kind {
        FixtureKind::Length { ell, offset } => {
            length_terms(entry.regime, entry.d, *ell, *offset, n)
        }
        FixtureKind::DegreeRow { r } => {
            let table = MultigradedTable::compute(entry.regime, *r, &[n as u32 - 1]);
            (0..n as u32).map(|k| table.get(*r, &[k])).collect()
        }
        FixtureKind::Single { r, s } => vec![count(entry.regime, *r, s)],
    }
}

/// First disagreement between an entry and the engine, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// 0-based position in the term list.
    pub index: usize,
    pub expected: BigUint,
    pub actual: BigUint,
}

pub fn check(entry: &FixtureEntry) -> Option<Mismatch> {
    recompute(entry)
        .into_iter()
        .zip(&entry.terms)
        .enumerate()
        .find(|(_, (got, want))| got != *want)
        .map(|(index, (actual, expected))| Mismatch {
            index,
            expected: expected.clone(),
            actual,
        })
}
