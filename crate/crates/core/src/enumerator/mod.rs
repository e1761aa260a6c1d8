//! Exhaustive searches over `B_k(n_1, ..., n_k)` expansions and over all
//! small graphs.

mod patterns;
pub mod reference;
mod sweep;

use std::fmt::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{realize_bk, BkSpec, MAX_ORDER};
use crate::spectra::{inertia_exact, Inertia};
use crate::{Error, Result};

pub use patterns::{bminus_families, pattern_match_bminus, FamilyPattern};
pub use sweep::{
    graphs_of_order, sweep_all_graphs, Observation, SweepOptions, SweepSummary,
    SWEEP_DEFAULT_MAX_ORDER,
};

/// Compositions of `n` into `k` positive parts in lexicographic order.
pub fn compositions(n: usize, k: usize) -> Compositions {
    let current = (k >= 1 && k <= n).then(|| {
        let mut c = vec![1; k];
        c[k - 1] = n - (k - 1);
        c
    });
    Compositions { current }
}

pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        // advance: find the rightmost position i < k-1 that can grow, i.e.
        // the tail after it holds more than one unit per slot
        let k = out.len();
        let mut next = out.clone();
        let mut i = k.saturating_sub(1);
        while i > 0 {
            i -= 1;
            let tail: usize = next[i + 1..].iter().sum();
            if tail > k - 1 - i {
                next[i] += 1;
                for slot in &mut next[i + 1..k - 1] {
                    *slot = 1;
                }
                next[k - 1] = tail - 1 - (k - 2 - i);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Representative of a spec and its half swap.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DedupKey(pub BkSpec);

pub fn dedup_key(spec: &BkSpec) -> DedupKey {
    DedupKey(spec.normalized())
}

/// Four-way split of `B_k(n)` by the sign of the third-largest eigenvalue,
/// read off the exact inertia (for `k >= 4`, `p >= 2` always holds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BkClass {
    /// `p >= 3`.
    Bplus,
    /// `p = 2`, `η >= 2`.
    B00,
    /// `p = 2`, `η = 1`.
    B0,
    /// `p = 2`, `η = 0`.
    Bminus,
}

impl BkClass {
    pub fn from_inertia(i: &Inertia) -> Option<BkClass> {
        match (i.p, i.eta) {
            (p, _) if p >= 3 => Some(BkClass::Bplus),
            (2, 0) => Some(BkClass::Bminus),
            (2, 1) => Some(BkClass::B0),
            (2, _) => Some(BkClass::B00),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BkClass::Bplus => "Bplus",
            BkClass::B00 => "B00",
            BkClass::B0 => "B0",
            BkClass::Bminus => "Bminus",
        }
    }
}

impl fmt::Display for BkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BkClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bplus" | "b+" => Ok(BkClass::Bplus),
            "b00" => Ok(BkClass::B00),
            "b0" => Ok(BkClass::B0),
            "bminus" | "b-" => Ok(BkClass::Bminus),
            other => Err(Error::invalid(format!("unknown class '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub spec: BkSpec,
    pub order: usize,
    pub class: BkClass,
    pub inertia: Inertia,
}

impl CensusRow {
    pub fn k(&self) -> usize {
        self.spec.k()
    }
}

pub fn classify_bk(spec: &BkSpec) -> Result<CensusRow> {
    if spec.k() < 4 {
        return Err(Error::invalid(format!(
            "classification needs k >= 4, got {}",
            spec.k()
        )));
    }
    let inertia = inertia_exact(&realize_bk(spec)?);
    let class = BkClass::from_inertia(&inertia).ok_or_else(|| {
        Error::Internal(format!(
            "{spec} has inertia {inertia}, but P_4 is an induced subgraph"
        ))
    })?;
    Ok(CensusRow {
        spec: spec.clone(),
        order: spec.order(),
        class,
        inertia,
    })
}

fn sort_rows(rows: &mut [CensusRow]) {
    rows.sort_by(|a, b| (a.k(), a.order, a.spec.parts()).cmp(&(b.k(), b.order, b.spec.parts())));
}

fn classify_all(specs: Vec<BkSpec>) -> Result<Vec<CensusRow>> {
    let mut rows = specs
        .par_iter()
        .map(classify_bk)
        .collect::<Result<Vec<_>>>()?;
    sort_rows(&mut rows);
    Ok(rows)
}

/// Every normalized `B_k` spec with order at most `n_max`, classified, sorted
/// by order and then parts.
pub fn census(k: usize, n_max: usize) -> Result<Vec<CensusRow>> {
    if k < 4 {
        return Err(Error::invalid(format!("census needs k >= 4, got {k}")));
    }
    if n_max > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: n_max,
            limit: MAX_ORDER,
        });
    }
    let specs: Vec<BkSpec> = (k..=n_max)
        .flat_map(|n| compositions(n, k))
        .map(|parts| BkSpec::new(parts).expect("k >= 4 positive parts"))
        .filter(BkSpec::is_normalized)
        .collect();
    classify_all(specs)
}

/// Census rows for every `k` in the range, sorted by `k`, order, parts.
pub fn census_range(ks: RangeInclusive<usize>, n_max: usize) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for k in ks {
        rows.extend(census(k, n_max)?);
    }
    Ok(rows)
}

/// The `B_k` graphs with `p = 2` and `η = 1`, `4 <= k <= 13`, order `<= 13`.
pub fn bstar_census() -> Result<Vec<CensusRow>> {
    Ok(census_range(4..=13, 13)?
        .into_iter()
        .filter(|r| r.class == BkClass::B0)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmptinessReport {
    pub class: BkClass,
    pub order: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub checked: usize,
    pub offenders: Vec<CensusRow>,
}

impl EmptinessReport {
    pub fn holds(&self) -> bool {
        self.offenders.is_empty()
    }
}

/// Classifies every normalized `B_k` spec of exactly order `n` for `k` in
/// the range and collects those of class `class`.
pub fn verify_empty_at(
    class: BkClass,
    ks: RangeInclusive<usize>,
    n: usize,
) -> Result<EmptinessReport> {
    let (k_min, k_max) = (*ks.start(), *ks.end());
    if k_min < 4 {
        return Err(Error::invalid("k must be at least 4"));
    }
    let specs: Vec<BkSpec> = ks
        .flat_map(|k| compositions(n, k))
        .map(|parts| BkSpec::new(parts).expect("k >= 4 positive parts"))
        .filter(BkSpec::is_normalized)
        .collect();
    let checked = specs.len();
    let offenders = classify_all(specs)?
        .into_iter()
        .filter(|r| r.class == class)
        .collect();
    Ok(EmptinessReport {
        class,
        order: n,
        k_min,
        k_max,
        checked,
        offenders,
    })
}

pub fn verify_empty_at_14(class: BkClass, ks: RangeInclusive<usize>) -> Result<EmptinessReport> {
    verify_empty_at(class, ks, 14)
}

pub const CSV_HEADER: &str = "k,parts,order,p,n_neg,eta,class,dedup_key";

/// CSV with header [`CSV_HEADER`]; parts are space-separated.
pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let parts: Vec<String> = r.spec.parts().iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},\"{}\"",
            r.k(),
            parts.join(" "),
            r.order,
            r.inertia.p,
            r.inertia.n_neg,
            r.inertia.eta,
            r.class,
            dedup_key(&r.spec).0
        );
    }
    out
}

/// Rows grouped by `k`: one line per `k` with its count and specs, then the total.
pub fn format_table1(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    let mut ks: Vec<usize> = rows.iter().map(CensusRow::k).collect();
    ks.dedup();
    for k in ks {
        let group: Vec<String> = rows
            .iter()
            .filter(|r| r.k() == k)
            .map(|r| r.spec.to_string())
            .collect();
        let _ = writeln!(out, "k={k:<3} count={:<4} {}", group.len(), group.join(" "));
    }
    let _ = writeln!(out, "total {}", rows.len());
    out
}
