//! Census of 2-bridge knots: closed-form counts, mergeable tallies and the
//! parallel driver that classifies every enumerated presentation.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{knot_class, CensusKey};
use crate::conway::ConwaySequence;
use crate::dtcode::{dt_from_presentation, DtCode};
use crate::enumerate::{census_domain, enumerate_umn, max_presentation_size, table_grid, UmnSpec};
use crate::error::{Error, Result};

/// Counts of 2-bridge knots with `c` crossings, from the Ernst–Sumners
/// closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotCounts {
    /// Knots and their reflections counted separately.
    pub tk_star: u64,
    /// Achiral knots.
    pub atk: u64,
    /// Knots up to reflection.
    pub tk: u64,
}

pub fn ernst_sumners(c: u32) -> Result<KnotCounts> {
    if c < 3 {
        return Err(Error::Domain(format!("crossing number must be at least 3, got {c}")));
    }
    if c > 120 {
        return Err(Error::Overflow("evaluating closed-form knot counts"));
    }
    let pow = |e: u32| 1u128 << e;
    let tk_star = match c % 4 {
        0 | 2 => (pow(c - 2) - 1) / 3,
        1 => (pow(c - 2) + pow((c - 1) / 2)) / 3,
        _ => (pow(c - 2) + pow((c - 1) / 2)).div_ceil(3),
    };
    let atk = match c % 4 {
        0 => (pow((c - 2) / 2) + 1) / 3,
        2 => (pow((c - 2) / 2) - 1) / 3,
        _ => 0,
    };
    let tk = (tk_star + atk) / 2;
    let narrow = |v: u128| u64::try_from(v).map_err(|_| Error::Overflow("narrowing knot counts"));
    Ok(KnotCounts {
        tk_star: narrow(tk_star)?,
        atk: narrow(atk)?,
        tk: narrow(tk)?,
    })
}

/// Exact counts keyed by `(m, n, c)`. Merging is plain addition, so partial
/// tables from independent workers combine in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusTable {
    counts: BTreeMap<(u32, u32, u32), u64>,
    achiral: BTreeMap<(u32, u32, u32), u64>,
}

impl CensusTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, m: u32, n: u32, c: u32, achiral: bool) {
        *self.counts.entry((m, n, c)).or_default() += 1;
        if achiral {
            *self.achiral.entry((m, n, c)).or_default() += 1;
        }
    }

    pub fn merge(&mut self, other: &CensusTable) {
        for (&k, &v) in &other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        for (&k, &v) in &other.achiral {
            *self.achiral.entry(k).or_default() += v;
        }
    }

    /// `TK_c^{m,n}`.
    pub fn count(&self, m: u32, n: u32, c: u32) -> u64 {
        self.counts.get(&(m, n, c)).copied().unwrap_or(0)
    }

    /// `TK^{m,n}`, the size of the enumerated cell.
    pub fn cell_total(&self, m: u32, n: u32) -> u64 {
        self.sum(|&(mm, nn, _)| mm == m && nn == n)
    }

    /// `TK_c^m`, summed over `n`.
    pub fn by_size(&self, m: u32, c: u32) -> u64 {
        self.sum(|&(mm, _, cc)| mm == m && cc == c)
    }

    /// `TK_c`, summed over every enumerated cell.
    pub fn by_crossings(&self, c: u32) -> u64 {
        self.sum(|&(_, _, cc)| cc == c)
    }

    pub fn achiral_by_crossings(&self, c: u32) -> u64 {
        self.achiral
            .iter()
            .filter(|((_, _, cc), _)| *cc == c)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Nonzero cells as `((m, n, c), count)`.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32, u32), u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    fn sum(&self, keep: impl Fn(&(u32, u32, u32)) -> bool) -> u64 {
        self.counts.iter().filter(|(k, _)| keep(k)).map(|(_, v)| v).sum()
    }
}

/// One enumerated presentation and what it classifies as.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub m: u32,
    pub n: u32,
    pub a: ConwaySequence,
    pub alpha: i64,
    pub beta: i64,
    pub c: u32,
    pub achiral: bool,
    pub dt: DtCode,
}

impl CensusRecord {
    pub fn from_presentation(a: ConwaySequence) -> Result<Self> {
        let class = knot_class(&a)?;
        let dt = dt_from_presentation(&a)?;
        Ok(CensusRecord {
            m: a.crossings(),
            n: a.len() as u32,
            alpha: class.alpha(),
            beta: class.beta(),
            c: class.crossing_number(),
            achiral: class.is_achiral(),
            dt,
            a,
        })
    }
}

/// Which cells a census enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scope {
    /// Only cells that can hold a knot of at most `max_crossings` crossings.
    #[default]
    Census,
    /// Every cell up to the same largest `m`, as in the full tabulation.
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub max_crossings: u32,
    pub scope: Scope,
    /// Materialise a record for every knot with at most `max_crossings`
    /// crossings.
    pub records: bool,
}

impl CensusOptions {
    pub fn new(max_crossings: u32) -> Self {
        CensusOptions {
            max_crossings,
            scope: Scope::Census,
            records: true,
        }
    }

    pub fn specs(&self) -> Vec<UmnSpec> {
        match self.scope {
            Scope::Census => census_domain(self.max_crossings),
            Scope::Grid => table_grid(max_presentation_size(self.max_crossings)),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Census {
    pub table: CensusTable,
    /// Sorted by `(m, n, emission order)`.
    pub records: Vec<CensusRecord>,
}

pub const MAX_CENSUS_CROSSINGS: u32 = 16;

pub fn run_census(options: CensusOptions) -> Result<Census> {
    if !(3..=MAX_CENSUS_CROSSINGS).contains(&options.max_crossings) {
        return Err(Error::Domain(format!(
            "census crossing bound must lie in 3..={MAX_CENSUS_CROSSINGS}, got {}",
            options.max_crossings
        )));
    }
    let parts = options
        .specs()
        .into_par_iter()
        .map(|spec| census_cell(spec, &options))
        .collect::<Result<Vec<_>>>()?;
    let mut census = Census::default();
    for (table, records) in parts {
        census.table.merge(&table);
        census.records.extend(records);
    }
    Ok(census)
}

fn census_cell(spec: UmnSpec, options: &CensusOptions) -> Result<(CensusTable, Vec<CensusRecord>)> {
    let mut table = CensusTable::new();
    let mut records = Vec::new();
    for p in enumerate_umn(spec) {
        let class = knot_class(&p)?;
        let c = class.crossing_number();
        let breach = |reason: String| Error::Invariant {
            sequence: p.to_string(),
            reason,
        };
        if class.alpha() % 2 == 0 {
            return Err(breach(format!("even alpha {}", class.alpha())));
        }
        if class.is_achiral() != p.is_palindromic() {
            return Err(breach(format!(
                "achiral = {} but palindromic = {}",
                class.is_achiral(),
                p.is_palindromic()
            )));
        }
        if c > spec.m() {
            return Err(breach(format!("crossing number {c} exceeds diagram size {}", spec.m())));
        }
        table.record(spec.m(), spec.n(), c, class.is_achiral());
        if options.records && c <= options.max_crossings {
            records.push(CensusRecord::from_presentation(p)?);
        }
    }
    Ok((table, records))
}

/// Census keys that occur more than once across `specs`, with the two
/// presentations that produced each.
pub fn find_duplicate_keys(specs: &[UmnSpec]) -> Result<Vec<(CensusKey, ConwaySequence, ConwaySequence)>> {
    let keyed = specs
        .par_iter()
        .map(|&spec| {
            enumerate_umn(spec)
                .map(|p| Ok((knot_class(&p)?.census_key(), p)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen: HashMap<CensusKey, ConwaySequence> = HashMap::new();
    let mut duplicates = Vec::new();
    for (key, p) in keyed.into_iter().flatten() {
        if let Some(first) = seen.get(&key) {
            duplicates.push((key, first.clone(), p));
        } else {
            seen.insert(key, p);
        }
    }
    Ok(duplicates)
}
