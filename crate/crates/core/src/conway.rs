//! Even Conway presentations `C(a_1, ..., a_n)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Fraction};

/// An even presentation: even length `n >= 2`, every entry a nonzero even
/// integer. Invalid sequences cannot be constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ConwaySequence {
    entries: Vec<i64>,
}

impl ConwaySequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 || entries.len() % 2 != 0 {
            return Err(Error::InvalidSequence(format!(
                "length must be even and at least 2, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&a| a == 0 || a % 2 != 0) {
            return Err(Error::InvalidSequence(format!(
                "entries must be nonzero and even, got {bad}"
            )));
        }
        if entries.iter().any(|a| a.checked_abs().is_none()) {
            return Err(Error::InvalidSequence("entry out of range".into()));
        }
        Ok(ConwaySequence { entries })
    }

    pub(crate) fn from_trusted(entries: Vec<i64>) -> Self {
        debug_assert!(ConwaySequence::new(entries.clone()).is_ok());
        ConwaySequence { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of terms `n`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Crossing count `m` of the diagram, the sum of `|a_i|`.
    pub fn crossings(&self) -> u32 {
        self.entries.iter().map(|a| a.unsigned_abs() as u32).sum()
    }

    /// The slope `[a_1, ..., a_n]`. All entries have magnitude at least 2,
    /// so evaluation cannot meet a zero tail.
    pub fn slope(&self) -> Result<Fraction> {
        rational::eval_terms(&self.entries)
    }

    pub fn reverse(&self) -> ConwaySequence {
        let mut entries = self.entries.clone();
        entries.reverse();
        ConwaySequence { entries }
    }

    /// The mirror image `-a`.
    pub fn negate(&self) -> ConwaySequence {
        ConwaySequence {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.entries.iter().eq(self.entries.iter().rev())
    }

    /// `a = -a^r`, the other way a clique collapses to two members.
    pub fn is_antipalindromic(&self) -> bool {
        self.entries
            .iter()
            .zip(self.entries.iter().rev())
            .all(|(x, y)| *x == -*y)
    }

    /// The distinct members of `{a, a^r, -a, -a^r}`, sorted.
    pub fn clique(&self) -> Vec<ConwaySequence> {
        let r = self.reverse();
        let mut members = vec![self.negate(), r.negate(), r, self.clone()];
        members.sort();
        members.dedup();
        members
    }

    /// The canonical member of the clique: among members with a positive
    /// first entry, the lexicographically greatest under signed order.
    pub fn clique_representative(&self) -> ConwaySequence {
        self.clique()
            .into_iter()
            .filter(|c| c.entries[0] > 0)
            .max()
            .expect("every clique has a member with a positive first entry")
    }

    pub fn is_clique_representative(&self) -> bool {
        is_representative(&self.entries)
    }
}

/// Allocation-free test of whether `entries` is its own clique
/// representative. With `a_1 > 0` the only other candidate is `a^r` when
/// `a_n > 0` and `-a^r` otherwise.
pub(crate) fn is_representative(entries: &[i64]) -> bool {
    let (Some(&first), Some(&last)) = (entries.first(), entries.last()) else {
        return false;
    };
    if first <= 0 {
        return false;
    }
    let flip = if last > 0 { 1 } else { -1 };
    let other = entries.iter().rev().map(|x| flip * x);
    entries.iter().copied().cmp(other) != Ordering::Less
}

impl TryFrom<Vec<i64>> for ConwaySequence {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        ConwaySequence::new(entries)
    }
}

impl From<ConwaySequence> for Vec<i64> {
    fn from(seq: ConwaySequence) -> Self {
        seq.entries
    }
}

impl fmt::Display for ConwaySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.entries, ",")
    }
}

pub(crate) fn write_joined(f: &mut impl fmt::Write, values: &[i64], sep: &str) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl FromStr for ConwaySequence {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `2,-2,4,-2`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidSequence(format!("cannot parse {t:?} as an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        ConwaySequence::new(entries)
    }
}
