//! Row-by-row weighted counting over height-function profiles.
//!
//! A height function is scanned one row at a time. The interface between two
//! consecutive rows is the lower row's profile, encoded as a bit mask of its
//! horizontal unit steps: bit `j` is set when the step from column `j` to
//! column `j + 1` goes up. Sweeping a row one cell at a time, the only extra
//! state is the vertical step on the cell's left edge, so a full state is
//! `(profile mask, vertical step)` packed into a single `u64`.
//!
//! At each cell the horizontal step above is either kept (matrix entry `0`)
//! or flipped. Flipping is allowed exactly when the step above agrees with
//! the incoming vertical step; it produces entry `+1` or `-1` with the sign
//! of the flipped step, and reverses the vertical step. Row boundaries force
//! the vertical step to `+1` on entry and `-1` on exit.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::EnumerateError;

fn accumulate<W: Zero>(map: &mut HashMap<u64, W>, key: u64, value: W) {
    match map.entry(key) {
        Entry::Occupied(mut slot) => {
            let prior = std::mem::replace(slot.get_mut(), W::zero());
            *slot.get_mut() = prior + value;
        }
        Entry::Vacant(slot) => {
            slot.insert(value);
        }
    }
}

/// Runs the sweep over `rows` rows of `width` cells each, starting from the
/// all-up top profile, and returns the weight distribution over bottom-row
/// profiles. `cell(r, j, entry)` supplies the weight of writing `entry` at
/// 1-based position `(r, j)`; weights multiply along a matrix and add across
/// matrices. Exact arithmetic keeps the result independent of map order.
pub(super) fn sweep_rows<W, F>(width: usize, rows: usize, mut cell: F) -> HashMap<u64, W>
where
    W: Clone + Zero + One + PartialEq,
    F: FnMut(usize, usize, i8) -> W,
{
    assert!(width >= 1 && width < 63, "profile width must fit the state key");
    let full = (1u64 << width) - 1;
    let vbit = 1u64 << width;
    let mut states: HashMap<u64, W> = HashMap::new();
    states.insert(full, W::one());
    for r in 1..=rows {
        let mut cur: HashMap<u64, W> = HashMap::with_capacity(states.len());
        for (mask, weight) in states {
            cur.insert(mask | vbit, weight);
        }
        for j in 0..width {
            let keep = cell(r, j + 1, 0);
            let flip_up = cell(r, j + 1, 1);
            let flip_down = cell(r, j + 1, -1);
            let bit = 1u64 << j;
            let mut next: HashMap<u64, W> = HashMap::with_capacity(2 * cur.len());
            for (key, weight) in cur {
                let step_up = key & bit != 0;
                let vertical_up = key & vbit != 0;
                let kept = if keep.is_one() {
                    weight.clone()
                } else {
                    weight.clone() * keep.clone()
                };
                accumulate(&mut next, key, kept);
                if step_up == vertical_up {
                    let factor = if step_up { &flip_up } else { &flip_down };
                    let flipped = if factor.is_one() {
                        weight
                    } else {
                        weight * factor.clone()
                    };
                    accumulate(&mut next, key ^ bit ^ vbit, flipped);
                }
            }
            cur = next;
        }
        states = HashMap::with_capacity(cur.len());
        for (key, weight) in cur {
            if key & vbit == 0 {
                states.insert(key, weight);
            }
        }
    }
    states
}

/// Counts order-`n` matrices by the row sweep. Agrees with
/// [`count_formula`](super::count_formula) but shares no code with it.
pub fn transfer_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut dist = sweep_rows::<BigUint, _>(n, n, |_, _, _| BigUint::one());
    dist.remove(&0).unwrap_or_else(BigUint::zero)
}

/// Sum of `x^k` over all order-`n` matrices, where `k` counts the `-1`
/// entries. `x = 1` recovers the plain count and `x = 2` gives
/// `2^(n(n-1)/2)`.
pub fn x_enumeration(n: usize, x: &BigRational) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let one = BigRational::one();
    let mut dist = sweep_rows(n, n, |_, _, entry| {
        if entry == -1 {
            x.clone()
        } else {
            one.clone()
        }
    });
    dist.remove(&0).unwrap_or_else(BigRational::zero)
}

/// Which chequerboard class of cells anchors the hybrid weighting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HybridPhase {
    /// Cells whose 1-based coordinate sum is even are the marked class;
    /// the top-left cell is marked. This is the primary convention.
    OriginEven,
    /// The complementary marking, with the top-left cell unmarked.
    OriginOdd,
}

impl HybridPhase {
    pub fn name(self) -> &'static str {
        match self {
            HybridPhase::OriginEven => "origin-even",
            HybridPhase::OriginOdd => "origin-odd",
        }
    }
}

impl std::str::FromStr for HybridPhase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "origin-even" => Ok(HybridPhase::OriginEven),
            "origin-odd" => Ok(HybridPhase::OriginOdd),
            other => Err(format!("unknown phase `{other}`")),
        }
    }
}

/// A hybrid weighted total together with its factorization as `2^a * 5^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HybridFactorization {
    pub phase: HybridPhase,
    pub total: BigUint,
    pub two_exponent: u64,
    pub five_exponent: u64,
}

/// Weighted count where a matrix contributes `2^k`, `k` being the number of
/// `-1` entries on marked cells plus `+1` entries on unmarked cells. The
/// total always factors as `2^a * 5^b`; any other outcome is reported as
/// [`EnumerateError::FactorizationFailed`].
pub fn hybrid_2_enumeration(
    n: usize,
    phase: HybridPhase,
) -> Result<HybridFactorization, EnumerateError> {
    let two = BigUint::from(2u32);
    let one = BigUint::one();
    let total = if n == 0 {
        BigUint::one()
    } else {
        let mut dist = sweep_rows(n, n, |r, j, entry| {
            let marked = match phase {
                HybridPhase::OriginEven => (r + j) % 2 == 0,
                HybridPhase::OriginOdd => (r + j) % 2 == 1,
            };
            if (marked && entry == -1) || (!marked && entry == 1) {
                two.clone()
            } else {
                one.clone()
            }
        });
        dist.remove(&0).unwrap_or_else(BigUint::zero)
    };
    if total.is_zero() {
        return Err(EnumerateError::FactorizationFailed { remainder: total });
    }
    let two_exponent = total.trailing_zeros().unwrap_or(0);
    let mut rest = &total >> two_exponent;
    let five = BigUint::from(5u32);
    let mut five_exponent = 0u64;
    loop {
        let (q, r) = rest.div_rem(&five);
        if r.is_zero() {
            rest = q;
            five_exponent += 1;
        } else {
            break;
        }
    }
    if !rest.is_one() {
        return Err(EnumerateError::FactorizationFailed { remainder: rest });
    }
    Ok(HybridFactorization {
        phase,
        total,
        two_exponent,
        five_exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::COUNTS;
    use num_bigint::BigInt;

    fn rational(value: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(value))
    }

    #[test]
    fn sweep_matches_frozen_counts() {
        for (i, expected) in COUNTS.iter().enumerate() {
            assert_eq!(transfer_count(i + 1).to_string(), *expected);
        }
    }

    #[test]
    fn weight_one_recovers_the_plain_count() {
        let one = rational(1);
        for (i, expected) in COUNTS.iter().enumerate() {
            let total = x_enumeration(i + 1, &one);
            assert!(total.is_integer());
            assert_eq!(total.to_integer().to_string(), *expected);
        }
    }

    #[test]
    fn weight_two_gives_a_power_of_two() {
        let two = rational(2);
        for n in 1..=10usize {
            let expected = BigInt::from(1) << (n * (n - 1) / 2);
            assert_eq!(x_enumeration(n, &two), BigRational::from_integer(expected));
        }
    }

    #[test]
    fn weight_three_matches_frozen_values() {
        let three = rational(3);
        let expected = [1u64, 2, 9, 90, 2025, 102060];
        for (i, value) in expected.iter().enumerate() {
            assert_eq!(
                x_enumeration(i + 1, &three),
                BigRational::from_integer(BigInt::from(*value))
            );
        }
    }

    #[test]
    fn weight_zero_counts_permutation_matrices() {
        let zero = rational(0);
        for (n, factorial) in [(1usize, 1i64), (2, 2), (3, 6), (4, 24), (5, 120)] {
            assert_eq!(x_enumeration(n, &zero), rational(factorial));
        }
    }

    #[test]
    fn fractional_weight_tracks_the_minus_distribution() {
        // Order 3 has six matrices with no -1 entry and one with a single -1.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let expected = BigRational::new(BigInt::from(13), BigInt::from(2));
        assert_eq!(x_enumeration(3, &half), expected);
    }

    #[test]
    fn hybrid_factorizations_match_frozen_tables() {
        let even: [(&str, u64, u64); 8] = [
            ("1", 0, 0),
            ("5", 0, 1),
            ("50", 1, 2),
            ("625", 0, 4),
            ("15625", 0, 6),
            ("1953125", 0, 9),
            ("488281250", 1, 12),
            ("152587890625", 0, 16),
        ];
        let odd: [(&str, u64, u64); 8] = [
            ("2", 1, 0),
            ("5", 0, 1),
            ("25", 0, 2),
            ("625", 0, 4),
            ("31250", 1, 6),
            ("1953125", 0, 9),
            ("244140625", 0, 12),
            ("152587890625", 0, 16),
        ];
        for (i, (value, a, b)) in even.iter().enumerate() {
            let got = hybrid_2_enumeration(i + 1, HybridPhase::OriginEven).unwrap();
            assert_eq!(got.total.to_string(), *value);
            assert_eq!((got.two_exponent, got.five_exponent), (*a, *b));
        }
        for (i, (value, a, b)) in odd.iter().enumerate() {
            let got = hybrid_2_enumeration(i + 1, HybridPhase::OriginOdd).unwrap();
            assert_eq!(got.total.to_string(), *value);
            assert_eq!((got.two_exponent, got.five_exponent), (*a, *b));
        }
    }

    #[test]
    fn phase_names_round_trip() {
        for phase in [HybridPhase::OriginEven, HybridPhase::OriginOdd] {
            assert_eq!(phase.name().parse::<HybridPhase>().unwrap(), phase);
        }
        assert!("diagonal".parse::<HybridPhase>().is_err());
    }
}
