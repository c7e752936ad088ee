//! Classification of 2-bridge knots `S(alpha, beta)`.
//!
//! Knots `S(alpha, beta)` and `S(alpha', beta')` coincide iff
//! `alpha = alpha'` and `beta' = beta^(+-1) mod alpha`; the mirror image is
//! `S(alpha, -beta)`. The knot is achiral iff `beta^2 = -1 mod alpha`.

use std::fmt;

use serde::Serialize;

use crate::conway::ConwaySequence;
use crate::error::{Error, Result};
use crate::rational::{self, mod_inverse};

/// A set of at most four residues mod `alpha`, kept sorted and deduplicated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    values: [i64; 4],
    len: u8,
}

impl Orbit {
    fn from_residues(residues: &[i64]) -> Self {
        let mut values = [i64::MAX; 4];
        let mut len = 0usize;
        for &r in residues {
            if !values[..len].contains(&r) {
                values[len] = r;
                len += 1;
            }
        }
        values[..len].sort_unstable();
        Orbit {
            values,
            len: len as u8,
        }
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.values[..self.len as usize]
    }

    pub fn smallest(&self) -> i64 {
        self.values[0]
    }

    pub fn contains(&self, r: i64) -> bool {
        self.as_slice().contains(&r)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::conway::write_joined(f, self.as_slice(), ",")
    }
}

/// Canonical data of the knot type `S(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoBridgeClass {
    alpha: i64,
    chiral_orbit: Orbit,
    full_orbit: Orbit,
    achiral: bool,
    crossing_number: u32,
}

impl TwoBridgeClass {
    /// Classifies `S(alpha, beta)` for odd `alpha >= 3` and `beta` a unit.
    pub fn from_slope(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 3 || alpha % 2 == 0 {
            return Err(Error::Domain(format!(
                "knot slopes need odd alpha >= 3, got {alpha}"
            )));
        }
        let b = beta.rem_euclid(alpha);
        let inv = mod_inverse(b, alpha)?;
        let chiral_orbit = Orbit::from_residues(&[b, inv]);
        let full_orbit = Orbit::from_residues(&[b, inv, alpha - b, alpha - inv]);
        let square = (b as i128 * b as i128 + 1) % alpha as i128;
        let mut class = TwoBridgeClass {
            alpha,
            chiral_orbit,
            full_orbit,
            achiral: square == 0,
            crossing_number: 0,
        };
        class.crossing_number = crossing_number(&class);
        Ok(class)
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// The canonical `beta`: the smallest element of the chiral orbit.
    pub fn beta(&self) -> i64 {
        self.chiral_orbit.smallest()
    }

    /// `{beta, beta^-1} mod alpha`.
    pub fn chiral_orbit(&self) -> &Orbit {
        &self.chiral_orbit
    }

    /// `{+-beta^(+-1)} mod alpha`.
    pub fn full_orbit(&self) -> &Orbit {
        &self.full_orbit
    }

    pub fn is_achiral(&self) -> bool {
        self.achiral
    }

    pub fn crossing_number(&self) -> u32 {
        self.crossing_number
    }

    pub fn census_key(&self) -> CensusKey {
        census_key(self)
    }
}

impl fmt::Display for TwoBridgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.alpha, self.beta())
    }
}

pub fn knot_class(p: &ConwaySequence) -> Result<TwoBridgeClass> {
    let slope = p.slope()?;
    TwoBridgeClass::from_slope(slope.alpha(), slope.beta())
}

/// With `mirror_sensitive`, a knot and its reflection are distinct.
pub fn equal_knots(x: &TwoBridgeClass, y: &TwoBridgeClass, mirror_sensitive: bool) -> bool {
    if x.alpha != y.alpha {
        return false;
    }
    if mirror_sensitive {
        x.chiral_orbit
            .as_slice()
            .iter()
            .any(|&b| y.chiral_orbit.contains(b))
    } else {
        x.full_orbit == y.full_orbit
    }
}

/// The least total of a regular continued fraction `alpha / beta'` over the
/// full orbit. The regular expansion gives a reduced alternating diagram,
/// whose crossing count is minimal.
pub fn crossing_number(x: &TwoBridgeClass) -> u32 {
    x.full_orbit
        .as_slice()
        .iter()
        .map(|&b| rational::positive_cf_weight(x.alpha, b))
        .min()
        .expect("orbits are never empty") as u32
}

/// Identifies a knot type up to reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CensusKey {
    pub alpha: i64,
    #[serde(serialize_with = "serialize_orbit")]
    pub orbit: Orbit,
}

fn serialize_orbit<S: serde::Serializer>(orbit: &Orbit, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(orbit.as_slice())
}

pub fn census_key(x: &TwoBridgeClass) -> CensusKey {
    CensusKey {
        alpha: x.alpha,
        orbit: x.full_orbit,
    }
}
