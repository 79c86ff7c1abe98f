//! Sweeps over many pairs, checking the small-value facts on every row:
//! `ict = 1` exactly for normal `H`, the values 2 and 4 never occur, and
//! `ict = 3` exactly for non-normal `H` of index 3.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use serde::Serialize;

use ict_core::groups::{Caps, Family};

use crate::engine::{compute, MethodArg};
use crate::failure::Failure;
use crate::source::PairSource;

pub const BUILTIN_FIXTURES: [(&str, &str); 3] = [
    ("order18", include_str!("../fixtures/order18.txt")),
    ("sym3_over_alt3", include_str!("../fixtures/sym3_over_alt3.txt")),
    ("d4_over_center", include_str!("../fixtures/d4_over_center.txt")),
];

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

pub fn parse_pq(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected P,Q, got {s:?}"))?;
    Ok((
        p.trim().parse().map_err(|_| format!("bad P in {s:?}"))?,
        q.trim().parse().map_err(|_| format!("bad Q in {s:?}"))?,
    ))
}

/// The default sweep: small members of every family plus the bundled fixtures.
pub fn standard_set() -> Vec<PairSource> {
    let mut out: Vec<PairSource> = Vec::new();
    out.extend((2..=5).map(|n| PairSource::Family(Family::Sym(n))));
    out.extend((4..=5).map(|n| PairSource::Family(Family::Alt(n))));
    out.extend((3..=10).map(|n| PairSource::Family(Family::Dihedral(n))));
    out.extend([(2, 3), (2, 5), (2, 7), (3, 7)].map(|(p, q)| PairSource::Family(Family::Pq(p, q))));
    out.extend(builtin_fixtures());
    out
}

pub fn builtin_fixtures() -> Vec<PairSource> {
    BUILTIN_FIXTURES
        .iter()
        .map(|(name, text)| PairSource::from_fixture_text(text, Some(name.to_string())).expect("bundled fixture parses"))
        .collect()
}

#[derive(Serialize, Debug, Clone)]
pub struct SweepRow {
    pub pair: String,
    pub index: usize,
    pub normal: bool,
    pub ict: String,
    pub method: &'static str,
}

pub fn run_sweep(sources: &[PairSource], caps: &Caps) -> Result<Vec<SweepRow>, Failure> {
    sources
        .iter()
        .map(|s| {
            let pair = s.build(caps)?;
            let report = compute(s, MethodArg::Auto, caps)?;
            Ok(SweepRow {
                pair: s.label(),
                index: pair.index(),
                normal: pair.h_is_normal(),
                ict: report.value.to_string(),
                method: report.method.name(),
            })
        })
        .collect()
}

/// First row contradicting one of the facts, if any.
pub fn check_facts(rows: &[SweepRow]) -> Result<(), Failure> {
    for r in rows {
        let v: BigUint = r.ict.parse().expect("decimal");
        let one = v == BigUint::from(1u32);
        if one != r.normal {
            return Err(Failure::Fact(format!(
                "{}: ict = {v} but H is {}normal",
                r.pair,
                if r.normal { "" } else { "not " }
            )));
        }
        if v == BigUint::from(2u32) || v == BigUint::from(4u32) {
            return Err(Failure::Fact(format!("{}: ict = {v}", r.pair)));
        }
        let three = v == BigUint::from(3u32);
        let index_three = r.index == 3 && !r.normal;
        if three != index_three {
            return Err(Failure::Fact(format!("{}: ict = {v} at index {}", r.pair, r.index)));
        }
    }
    Ok(())
}

pub fn render(rows: &[SweepRow]) -> String {
    let w = rows.iter().map(|r| r.pair.len()).max().unwrap_or(4).max(4);
    let mut out = format!("{:w$}  {:>5}  {:6}  {:>20}  method\n", "pair", "index", "normal", "ict");
    for r in rows {
        out.push_str(&format!(
            "{:w$}  {:>5}  {:6}  {:>20}  {}\n",
            r.pair,
            r.index,
            if r.normal { "yes" } else { "no" },
            r.ict,
            r.method
        ));
    }
    out
}
