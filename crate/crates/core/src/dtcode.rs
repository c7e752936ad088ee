//! Dowker–Thistlethwaite codes for even Conway presentations.
//!
//! Two independent routes produce the code: [`dt_from_presentation`] uses
//! closed-form crossing labels, and [`dt_via_traversal`] walks an explicit
//! model of the oriented plait diagram. They must always agree.

mod traversal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::conway::{write_joined, ConwaySequence};
use crate::error::{Error, Result};

pub use traversal::dt_via_traversal;

/// The signed even labels paired with the odd labels `1, 3, ..., 2m-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DtCode {
    evens: Vec<i64>,
}

impl DtCode {
    pub fn new(evens: Vec<i64>) -> Result<Self> {
        if !validate_dt(&evens, None) {
            return Err(Error::InvalidDtCode(format!(
                "{:?} is not a permutation of the even labels up to {}",
                evens,
                2 * evens.len()
            )));
        }
        Ok(DtCode { evens })
    }

    pub fn evens(&self) -> &[i64] {
        &self.evens
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.evens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.evens.is_empty()
    }
}

/// Checks that `evens` has at least three entries whose magnitudes are
/// exactly `{2, 4, ..., 2m}`; `expected_len` additionally pins `m`.
pub fn validate_dt(evens: &[i64], expected_len: Option<usize>) -> bool {
    let m = evens.len();
    if m < 3 || expected_len.is_some_and(|len| len != m) {
        return false;
    }
    let mut seen = vec![false; m];
    for &e in evens {
        let mag = e.unsigned_abs() as usize;
        if mag == 0 || mag % 2 != 0 || mag > 2 * m {
            return false;
        }
        let slot = &mut seen[mag / 2 - 1];
        if *slot {
            return false;
        }
        *slot = true;
    }
    true
}

impl TryFrom<Vec<i64>> for DtCode {
    type Error = Error;

    fn try_from(evens: Vec<i64>) -> Result<Self> {
        DtCode::new(evens)
    }
}

impl From<DtCode> for Vec<i64> {
    fn from(code: DtCode) -> Self {
        code.evens
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.evens, " ")
    }
}

impl FromStr for DtCode {
    type Err = Error;

    /// Parses the space-separated form, e.g. `6 -8 2 -4`.
    fn from_str(s: &str) -> Result<Self> {
        let evens = s
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::InvalidDtCode(format!("cannot parse {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DtCode::new(evens)
    }
}

/// Crossing labels of each twist region, as `(middle, outer)` pairs: the
/// k-th label written on the leftwards middle strand meets the k-th label on
/// the rightwards outer strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingLabels {
    regions: Vec<Vec<(i64, i64)>>,
}

impl CrossingLabels {
    pub fn regions(&self) -> &[Vec<(i64, i64)>] {
        &self.regions
    }

    fn crossings(&self) -> usize {
        self.regions.iter().map(Vec::len).sum()
    }

    fn check(&self, p: &ConwaySequence) -> Result<()> {
        let m = self.crossings();
        let mut seen = vec![false; 2 * m];
        let fail = |reason: String| Error::Invariant {
            sequence: p.to_string(),
            reason,
        };
        for &(mid, out) in self.regions.iter().flatten() {
            let odd = [mid, out].into_iter().filter(|l| l % 2 != 0).count();
            if odd != 1 {
                return Err(fail(format!("pair ({mid}, {out}) needs exactly one odd label")));
            }
            for label in [mid, out] {
                if label % 2 != 0 && label < 0 {
                    return Err(fail(format!("odd label {label} is negative")));
                }
                let mag = label.unsigned_abs() as usize;
                if mag == 0 || mag > 2 * m || std::mem::replace(&mut seen[mag - 1], true) {
                    return Err(fail(format!("label {label} is out of range or repeated")));
                }
            }
        }
        Ok(())
    }

    /// Reads off the signed even partner of each odd label in order.
    pub fn to_dt(&self) -> Result<DtCode> {
        let m = self.crossings();
        let mut evens = vec![0i64; m];
        for &(mid, out) in self.regions.iter().flatten() {
            let (odd, even) = if mid % 2 != 0 { (mid, out) } else { (out, mid) };
            evens[(odd as usize - 1) / 2] = even;
        }
        DtCode::new(evens)
    }
}

/// Closed-form crossing labels.
///
/// With `A_i = |a_i|` and `s_i = sign(a_i)`, region `i` carries
/// `middle_k = (M_i + 1 - k) s_i^k` and `outer_k = (O_i + k) s_i^(k+1)` for
/// `k = 1..=A_i`, where
///
/// * `O_1 = 0`, `O_i = sum of A_j over odd j <= i-2` for odd `i`,
///   `O_i = M_1 + sum of A_j over even j <= i-2` for even `i`;
/// * `M_i = T + sum_{j >= i} A_j` with `T` the sum of `A_j` over all odd `j`.
///
/// `T` is the total length of the upper outer pass, i.e. the label reached
/// when the walk first arrives at the right end of the diagram.
pub fn labels_from_formula(p: &ConwaySequence) -> Result<CrossingLabels> {
    let a = p.entries();
    let n = a.len();
    let mags: Vec<i64> = a.iter().map(|x| x.abs()).collect();
    // 1-based parity: index 0 is region 1.
    let upper_total: i64 = mags.iter().step_by(2).sum();
    let mut suffix = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + mags[i];
    }
    let middle_offset = |i: usize| upper_total + suffix[i];
    let m1 = middle_offset(0);

    let mut regions = Vec::with_capacity(n);
    let (mut odd_acc, mut even_acc) = (0i64, 0i64);
    for (i, &entry) in a.iter().enumerate() {
        let region_is_odd = i % 2 == 0;
        let outer_offset = if region_is_odd { odd_acc } else { m1 + even_acc };
        let mid = middle_offset(i);
        let neg = entry < 0;
        let sign = |power: i64| if neg && power % 2 != 0 { -1 } else { 1 };
        let pairs = (1..=mags[i])
            .map(|k| ((mid + 1 - k) * sign(k), (outer_offset + k) * sign(k + 1)))
            .collect();
        regions.push(pairs);
        if region_is_odd {
            odd_acc += mags[i];
        } else {
            even_acc += mags[i];
        }
    }
    let labels = CrossingLabels { regions };
    labels.check(p)?;
    Ok(labels)
}

pub fn dt_from_presentation(p: &ConwaySequence) -> Result<DtCode> {
    labels_from_formula(p)?.to_dt()
}
