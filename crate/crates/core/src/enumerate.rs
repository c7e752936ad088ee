//! Generation of the sets `U^{m,n}`: one clique representative for every
//! even presentation with `n` terms and `m` crossings.
//!
//! Candidates are streamed, never materialised: compositions of `m` into `n`
//! even parts in colexicographic order, then sign patterns as a binary
//! counter with the first entry held positive. A candidate is emitted iff it
//! is its own clique representative.

use std::fmt;

use crate::conway::{self, ConwaySequence};
use crate::error::{Error, Result};

/// A cell `(m, n)`: `m` crossings split over `n` twist regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UmnSpec {
    m: u32,
    n: u32,
}

impl UmnSpec {
    /// Both even, `n >= 2`, `m >= 4`. `2n > m` is accepted and yields an
    /// empty set.
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m % 2 != 0 || n % 2 != 0 || n < 2 || m < 4 {
            return Err(Error::Domain(format!(
                "(m, n) must be even with m >= 4 and n >= 2, got ({m}, {n})"
            )));
        }
        Ok(UmnSpec { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        2 * self.n > self.m
    }
}

impl fmt::Display for UmnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Ordered `n`-tuples of positive even integers summing to `m`, in
/// colexicographic order (last entry varies slowest).
#[derive(Debug, Clone)]
pub struct EvenCompositions {
    // Halves of the parts, stored reversed so colex order on the tuple is lex
    // order on `rev`.
    rev: Vec<u32>,
    done: bool,
}

pub fn even_compositions(m: u32, n: u32) -> EvenCompositions {
    let n = n as usize;
    let half = m / 2;
    if n == 0 || m % 2 != 0 || (half as usize) < n {
        return EvenCompositions {
            rev: Vec::new(),
            done: true,
        };
    }
    let mut rev = vec![1; n];
    rev[n - 1] = half - (n as u32 - 1);
    EvenCompositions { rev, done: false }
}

impl EvenCompositions {
    fn advance(&mut self) {
        let n = self.rev.len();
        // Lex successor: bump the rightmost position j < n-1 whose tail can
        // give up one unit, then reset the tail to its minimum.
        let mut tail = self.rev[n - 1];
        for j in (0..n - 1).rev() {
            let tail_len = (n - 1 - j) as u32;
            if tail > tail_len {
                self.rev[j] += 1;
                let remaining = tail - 1;
                for slot in &mut self.rev[j + 1..n - 1] {
                    *slot = 1;
                }
                self.rev[n - 1] = remaining - (tail_len - 1);
                return;
            }
            tail += self.rev[j];
        }
        self.done = true;
    }
}

impl Iterator for EvenCompositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        let item = self.rev.iter().rev().map(|&h| 2 * h as i64).collect();
        self.advance();
        Some(item)
    }
}

/// Streams the representatives of `U^{m,n}` in deterministic order.
pub struct Representatives {
    compositions: EvenCompositions,
    current: Vec<i64>,
    pattern: u32,
    patterns: u32,
    scratch: Vec<i64>,
}

pub fn enumerate_umn(spec: UmnSpec) -> Representatives {
    let patterns = 1u32 << (spec.n - 1);
    Representatives {
        compositions: even_compositions(spec.m, spec.n),
        current: Vec::new(),
        pattern: patterns,
        patterns,
        scratch: Vec::with_capacity(spec.n as usize),
    }
}

impl Iterator for Representatives {
    type Item = ConwaySequence;

    fn next(&mut self) -> Option<ConwaySequence> {
        loop {
            if self.pattern == self.patterns {
                self.current = self.compositions.next()?;
                self.pattern = 0;
            }
            let bits = self.pattern;
            self.pattern += 1;
            // Bit k negates entry k+1; entry 0 stays positive.
            self.scratch.clear();
            self.scratch.push(self.current[0]);
            self.scratch.extend(
                self.current[1..]
                    .iter()
                    .enumerate()
                    .map(|(k, &a)| if bits >> k & 1 == 1 { -a } else { a }),
            );
            if conway::is_representative(&self.scratch) {
                return Some(ConwaySequence::from_trusted(self.scratch.clone()));
            }
        }
    }
}

/// Every cell that can hold a knot of at most `max_c` crossings, using the
/// bound `m - n + 1 <= c`.
pub fn census_domain(max_c: u32) -> Vec<UmnSpec> {
    let mut specs = Vec::new();
    let mut m = 4;
    while m - m / 2 < max_c {
        for n in (2..=m / 2).step_by(2) {
            if m - n < max_c {
                specs.push(UmnSpec { m, n });
            }
        }
        m += 2;
    }
    specs
}

/// All nonempty cells with `m <= max_m`.
pub fn table_grid(max_m: u32) -> Vec<UmnSpec> {
    (4..=max_m)
        .step_by(2)
        .flat_map(|m| (2..=m / 2).step_by(2).map(move |n| UmnSpec { m, n }))
        .collect()
}

/// The largest `m` in [`census_domain`] for `max_c`.
pub fn max_presentation_size(max_c: u32) -> u32 {
    census_domain(max_c).iter().map(UmnSpec::m).max().unwrap_or(0)
}
