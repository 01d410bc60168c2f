//! Counting height functions on half boards.
//!
//! A half board of order `n` holds rows `0..=n` of a height function on a
//! board of width `2n`: row `r` runs in unit steps from `r` on the left edge
//! to `2n - r` on the right edge, and consecutive rows differ by exactly one
//! per column. Row 0 is fully forced. The bottom row is either pinned to the
//! alternating profile `n, n + c_1, n, n + c_2, ..., n` given by a `+-1`
//! pattern `c`, or left free to be any balanced `+-1` path from `n` to `n`.
//!
//! Cell entries are the same second differences as on full boards, so the
//! weighted count doubling each `-1` entry reuses the row sweep from the
//! transfer module.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::transfer::sweep_rows;
use super::EnumerateError;

/// How the bottom row of a half board is constrained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HalfVariant {
    /// Bottom row pinned to the alternating profile of the given pattern.
    FixedAlternating(Vec<i8>),
    /// Bottom row free over all balanced `+-1` paths.
    FreeBottom,
}

/// A half-board counting problem: the order plus the bottom-row constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpec {
    n: usize,
    variant: HalfVariant,
}

impl HalfSpec {
    /// Half board whose bottom row follows the alternating profile of
    /// `pattern`, one `+-1` per interior peak or valley.
    pub fn fixed_alternating(pattern: &[i8]) -> Result<HalfSpec, EnumerateError> {
        if pattern.is_empty() {
            return Err(EnumerateError::BadHalfPattern {
                detail: "pattern must have at least one entry".to_string(),
            });
        }
        if let Some(pos) = pattern.iter().position(|c| *c != 1 && *c != -1) {
            return Err(EnumerateError::BadHalfPattern {
                detail: format!("entry {pos} is not +1 or -1"),
            });
        }
        Ok(HalfSpec {
            n: pattern.len(),
            variant: HalfVariant::FixedAlternating(pattern.to_vec()),
        })
    }

    /// Half board of order `n` with an unconstrained bottom row.
    pub fn free_bottom(n: usize) -> Result<HalfSpec, EnumerateError> {
        if n == 0 {
            return Err(EnumerateError::BadHalfPattern {
                detail: "order must be at least 1".to_string(),
            });
        }
        Ok(HalfSpec {
            n,
            variant: HalfVariant::FreeBottom,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> &HalfVariant {
        &self.variant
    }
}

/// Parses a pattern string of `+` and `-` characters into `+-1` entries.
pub fn parse_pattern(text: &str) -> Result<Vec<i8>, EnumerateError> {
    text.chars()
        .map(|ch| match ch {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(EnumerateError::BadHalfPattern {
                detail: format!("unexpected character `{other}`"),
            }),
        })
        .collect()
}

/// Weight distribution over bottom-row profiles, keyed by step mask.
fn bottom_distribution(n: usize, weighted: bool) -> HashMap<u64, BigUint> {
    let two = BigUint::from(2u32);
    let one = BigUint::one();
    sweep_rows(2 * n, n, |_, _, entry| {
        if weighted && entry == -1 {
            two.clone()
        } else {
            one.clone()
        }
    })
}

/// Step mask of the alternating bottom profile for `pattern`.
fn pattern_mask(pattern: &[i8]) -> u64 {
    let mut mask = 0u64;
    for (t, c) in pattern.iter().enumerate() {
        let offset = if *c == 1 { 0 } else { 1 };
        mask |= 1u64 << (2 * t + offset);
    }
    mask
}

fn resolve(spec: &HalfSpec, weighted: bool) -> BigUint {
    let mut dist = bottom_distribution(spec.n, weighted);
    match &spec.variant {
        HalfVariant::FixedAlternating(pattern) => dist
            .remove(&pattern_mask(pattern))
            .unwrap_or_else(BigUint::zero),
        HalfVariant::FreeBottom => dist.into_values().sum(),
    }
}

/// Number of half boards matching `spec`.
pub fn half_count(spec: &HalfSpec) -> BigUint {
    resolve(spec, false)
}

/// Weighted number of half boards matching `spec`, doubling per `-1` entry.
pub fn half_2_enumeration(spec: &HalfSpec) -> BigUint {
    resolve(spec, true)
}

/// Aggregate count for one pattern class, grouped by how many `+1`s the
/// pattern contains.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfAverage {
    /// Number of `+1` entries shared by the patterns in this class.
    pub plus_count: usize,
    /// Common entry sum of the class, `2 * plus_count - n`.
    pub entry_sum: i64,
    /// Number of patterns in the class, the binomial coefficient.
    pub class_size: BigUint,
    /// Sum of the half-board counts over the class.
    pub total: BigUint,
    /// `total / class_size`, kept exact.
    pub average: BigRational,
}

/// Per-class averages of fixed-pattern half-board counts for order `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfAverageReport {
    pub n: usize,
    pub averages: Vec<HalfAverage>,
    /// Whether every class has the same average.
    pub all_equal: bool,
}

/// Groups the `2^n` fixed patterns by entry sum and averages the
/// half-board count within each class. The averages coincide across all
/// classes; the report records them so callers can verify that.
pub fn half_average_property(n: usize) -> HalfAverageReport {
    assert!(n >= 1, "order must be at least 1");
    let dist = bottom_distribution(n, false);
    let mut totals = vec![BigUint::zero(); n + 1];
    for bits in 0u64..(1 << n) {
        let pattern: Vec<i8> = (0..n)
            .map(|t| if bits >> t & 1 == 1 { 1 } else { -1 })
            .collect();
        let plus_count = bits.count_ones() as usize;
        if let Some(count) = dist.get(&pattern_mask(&pattern)) {
            totals[plus_count] += count;
        }
    }
    let averages: Vec<HalfAverage> = totals
        .into_iter()
        .enumerate()
        .map(|(plus_count, total)| {
            let class_size = num_integer::binomial(BigUint::from(n), BigUint::from(plus_count));
            let average = BigRational::new(
                BigInt::from(total.clone()),
                BigInt::from(class_size.clone()),
            );
            HalfAverage {
                plus_count,
                entry_sum: 2 * plus_count as i64 - n as i64,
                class_size,
                total,
                average,
            }
        })
        .collect();
    let all_equal = averages
        .windows(2)
        .all(|pair| pair[0].average == pair[1].average);
    HalfAverageReport {
        n,
        averages,
        all_equal,
    }
}
