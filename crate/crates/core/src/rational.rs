//! Exact slopes and continued fractions over checked 64-bit integers.
//!
//! A continued fraction `[a_1, ..., a_n]` denotes
//! `a_1 + 1/(a_2 + 1/(... + 1/a_n))`. Every operation here is a pure
//! function; overflow is reported as [`Error::Overflow`] rather than wrapped.

use std::fmt;

use crate::error::{Error, Result};

/// A reduced fraction `alpha / beta` with `alpha > 0`; the sign lives on `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    alpha: i64,
    beta: i64,
}

impl Fraction {
    /// Builds the reduced form of `numerator / denominator`.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain("fraction with zero denominator".into()));
        }
        if numerator == 0 {
            return Err(Error::ZeroSlope);
        }
        let g = gcd(numerator, denominator);
        let (mut alpha, mut beta) = (numerator / g, denominator / g);
        if alpha < 0 {
            alpha = alpha.checked_neg().ok_or(Error::Overflow("normalising sign"))?;
            beta = beta.checked_neg().ok_or(Error::Overflow("normalising sign"))?;
        }
        Ok(Fraction { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

/// Terms of a finite continued fraction. Never empty, never contains zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfTerms(Vec<i64>);

impl CfTerms {
    pub fn new(terms: Vec<i64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyTerms);
        }
        if let Some(index) = terms.iter().position(|&t| t == 0) {
            return Err(Error::ZeroTerm { index });
        }
        Ok(CfTerms(terms))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the absolute values of the terms.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|t| t.abs()).sum()
    }
}

impl AsRef<[i64]> for CfTerms {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Evaluates a continued fraction to its reduced slope.
pub fn eval_cf(terms: &CfTerms) -> Result<Fraction> {
    eval_terms(terms.as_slice())
}

/// Evaluates a term slice right to left with unreduced numerator/denominator
/// pairs. Errors if a tail evaluates to zero and must then be inverted.
pub(crate) fn eval_terms(terms: &[i64]) -> Result<Fraction> {
    let (&last, rest) = terms.split_last().ok_or(Error::EmptyTerms)?;
    if last == 0 {
        return Err(Error::ZeroTerm {
            index: terms.len() - 1,
        });
    }
    let (mut num, mut den) = (last, 1i64);
    for (index, &a) in rest.iter().enumerate().rev() {
        if a == 0 {
            return Err(Error::ZeroTerm { index });
        }
        if num == 0 {
            return Err(Error::ZeroTail { index: index + 1 });
        }
        // a + den/num = (a*num + den) / num
        let next = a
            .checked_mul(num)
            .and_then(|v| v.checked_add(den))
            .ok_or(Error::Overflow("evaluating a continued fraction"))?;
        (num, den) = (next, num);
    }
    Fraction::new(num, den)
}

/// The regular expansion of `alpha / beta` for `alpha > beta > 0`: every term
/// is positive and the last is at least 2 unless the whole value is 1.
pub fn positive_cf(f: Fraction) -> Result<CfTerms> {
    let (alpha, beta) = (f.alpha(), f.beta());
    if !(alpha > beta && beta > 0) {
        return Err(Error::Domain(format!(
            "positive expansion needs alpha > beta > 0, got {f}"
        )));
    }
    let mut terms = Vec::new();
    let (mut num, mut den) = (alpha, beta);
    while den != 0 {
        terms.push(num / den);
        (num, den) = (den, num % den);
    }
    CfTerms::new(terms)
}

/// Sum of the regular expansion terms, without materialising them.
pub(crate) fn positive_cf_weight(alpha: i64, beta: i64) -> i64 {
    debug_assert!(alpha > beta && beta > 0);
    let (mut num, mut den, mut sum) = (alpha, beta, 0);
    while den != 0 {
        sum += num / den;
        (num, den) = (den, num % den);
    }
    sum
}

/// An expansion with every term a nonzero even integer.
///
/// Requires `alpha` odd and `beta` even; only such slopes admit an all-even
/// expansion, and its length is then necessarily even. Each step takes the
/// even integer nearest to the current value. Because numerator and
/// denominator alternate parity, the current value is never an odd integer,
/// so the nearest even integer is unique and the remainder lies strictly
/// inside (-1, 1).
pub fn even_cf(f: Fraction) -> Result<CfTerms> {
    let (alpha, beta) = (f.alpha(), f.beta());
    if alpha % 2 == 0 || beta % 2 != 0 || beta.abs() >= alpha {
        return Err(Error::Domain(format!(
            "even expansion needs odd alpha, even beta and |alpha/beta| > 1, got {f}"
        )));
    }
    let mut terms = Vec::new();
    // Current value num/den with den > 0.
    let (mut num, mut den) = if beta > 0 {
        (alpha, beta)
    } else {
        (-alpha, -beta)
    };
    loop {
        let twice = den
            .checked_mul(2)
            .ok_or(Error::Overflow("computing an even quotient"))?;
        let a = 2 * (num + den).div_euclid(twice);
        debug_assert!(a != 0);
        terms.push(a);
        let rem = num - a * den;
        if rem == 0 {
            break;
        }
        // Reciprocal of rem/den, keeping the denominator positive.
        (num, den) = if rem > 0 { (den, rem) } else { (-den, -rem) };
    }
    CfTerms::new(terms)
}

/// The inverse of `b` modulo `a`, in `[1, a-1]`.
pub fn mod_inverse(b: i64, a: i64) -> Result<i64> {
    if a < 2 {
        return Err(Error::Domain(format!("modulus must be at least 2, got {a}")));
    }
    let b_red = b.rem_euclid(a);
    let (mut r0, mut r1) = (a as i128, b_red as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible {
            value: b,
            modulus: a,
        });
    }
    Ok(t0.rem_euclid(a as i128) as i64)
}
