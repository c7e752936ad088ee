//! DT codes by walking an explicit model of the oriented plait diagram.
//!
//! The diagram has four horizontal levels, numbered from the top:
//!
//! ```text
//! 0  ──────────────────────────────   top arc, no crossings
//! 1  ──╮╭──────╮╭──────────────────
//! 2  ──╯╰──╮╭──╯╰──╮╭── ...            odd regions twist levels 1,2
//! 3  ──────╯╰──────╯╰──                even regions twist levels 2,3
//! ```
//!
//! Region `i` is a run of `|a_i|` crossings, one per column. At the left end
//! levels 0,1 and 2,3 are joined by caps; at the right end (even `n`) levels
//! 1,2 are capped and level 3 returns to level 0 around the outside. The top
//! arc runs leftwards, so the walk starts at the upper left heading right.

use crate::conway::ConwaySequence;
use crate::error::{Error, Result};

use super::DtCode;

/// Which diagonal of a crossing column carries the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Diagonal {
    /// Upper-left to lower-right.
    Falling,
    /// Lower-left to upper-right.
    Rising,
}

#[derive(Debug, Clone, Copy)]
struct Column {
    upper: usize,
    over: Diagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Heading {
    Right,
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Position {
    /// Gap between columns, `0..=m`; gap `g` lies left of column `g`.
    gap: usize,
    level: usize,
    heading: Heading,
}

fn build_columns(p: &ConwaySequence) -> Vec<Column> {
    let mut columns = Vec::with_capacity(p.crossings() as usize);
    for (i, &a) in p.entries().iter().enumerate() {
        let odd_region = i % 2 == 0;
        let upper = if odd_region { 1 } else { 2 };
        // Positive odd regions put the falling strand over; positive even
        // regions the rising one. Negative entries reflect every crossing.
        let over = match (odd_region, a > 0) {
            (true, true) | (false, false) => Diagonal::Falling,
            _ => Diagonal::Rising,
        };
        columns.extend(std::iter::repeat(Column { upper, over }).take(a.unsigned_abs() as usize));
    }
    columns
}

/// Passing `column` while on `level` heading `heading`: returns the exit
/// level and whether the walker travels over, or `None` if the column does
/// not touch `level`.
fn pass(column: Column, level: usize, heading: Heading) -> Option<(usize, bool)> {
    let from_upper = if level == column.upper {
        true
    } else if level == column.upper + 1 {
        false
    } else {
        return None;
    };
    let diagonal = match (heading, from_upper) {
        (Heading::Right, true) | (Heading::Left, false) => Diagonal::Falling,
        _ => Diagonal::Rising,
    };
    let exit = if from_upper { level + 1 } else { level - 1 };
    Some((exit, diagonal == column.over))
}

pub fn dt_via_traversal(p: &ConwaySequence) -> Result<DtCode> {
    let malformed = |reason: String| Error::MalformedDiagram {
        sequence: p.to_string(),
        reason,
    };
    let columns = build_columns(p);
    let m = columns.len();
    // visits[c] = (label, over) for each pass through column c
    let mut visits: Vec<Vec<(usize, bool)>> = vec![Vec::with_capacity(2); m];

    let start = Position {
        gap: 0,
        level: 1,
        heading: Heading::Right,
    };
    let mut pos = start;
    let mut label = 0usize;
    let step_limit = 8 * (m + 1);
    for _ in 0..step_limit {
        match pos.heading {
            Heading::Right if pos.gap == m => {
                pos.level = match pos.level {
                    1 => 2,
                    2 => 1,
                    3 => 0,
                    _ => 3,
                };
                pos.heading = Heading::Left;
            }
            Heading::Left if pos.gap == 0 => {
                pos.level ^= 1;
                pos.heading = Heading::Right;
            }
            heading => {
                let index = if heading == Heading::Right {
                    pos.gap
                } else {
                    pos.gap - 1
                };
                if let Some((exit, over)) = pass(columns[index], pos.level, heading) {
                    label += 1;
                    visits[index].push((label, over));
                    pos.level = exit;
                }
                if heading == Heading::Right {
                    pos.gap += 1;
                } else {
                    pos.gap -= 1;
                }
            }
        }
        if pos == start {
            break;
        }
    }
    if pos != start {
        return Err(malformed("walk did not close up".into()));
    }
    if label != 2 * m {
        return Err(malformed(format!(
            "walk passed {label} crossings, expected {}",
            2 * m
        )));
    }

    let mut evens = vec![0i64; m];
    for (c, pair) in visits.iter().enumerate() {
        let [(l1, o1), (l2, o2)] = pair[..] else {
            return Err(malformed(format!("column {c} visited {} times", pair.len())));
        };
        let ((odd, _), (even, even_over)) = match (l1 % 2, l2 % 2) {
            (1, 0) => ((l1, o1), (l2, o2)),
            (0, 1) => ((l2, o2), (l1, o1)),
            _ => return Err(malformed(format!("column {c} labels {l1},{l2} share parity"))),
        };
        let signed = if even_over { -(even as i64) } else { even as i64 };
        evens[(odd - 1) / 2] = signed;
    }
    DtCode::new(evens)
}
