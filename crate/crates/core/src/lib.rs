//! Enumeration and classification of 2-bridge knots.
//!
//! Every 2-bridge knot has a unique even Conway presentation `C(a_1, ..., a_n)`
//! up to reversal and mirroring. This crate enumerates those presentations,
//! classifies each as `S(alpha, beta)`, computes its crossing number from
//! continued fractions, produces Dowker–Thistlethwaite codes, and tallies the
//! results into census tables.

pub mod census;
pub mod classify;
pub mod conway;
pub mod dtcode;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod rational;
pub mod verify;

pub use census::{
    ernst_sumners, run_census, Census, CensusOptions, CensusRecord, CensusTable, KnotCounts, Scope,
};
pub use classify::{census_key, crossing_number, equal_knots, knot_class, CensusKey, Orbit, TwoBridgeClass};
pub use conway::ConwaySequence;
pub use dtcode::{dt_from_presentation, dt_via_traversal, labels_from_formula, validate_dt, CrossingLabels, DtCode};
pub use enumerate::{census_domain, enumerate_umn, even_compositions, table_grid, UmnSpec};
pub use error::{Error, Result};
pub use export::{export, Format};
pub use rational::{eval_cf, even_cf, mod_inverse, positive_cf, CfTerms, Fraction};
pub use verify::{verify, TableId, VerifyReport};
