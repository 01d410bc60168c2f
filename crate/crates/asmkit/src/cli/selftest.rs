//! The acceptance checks behind `asmkit selftest`.
//!
//! Each check exercises one headline claim of the crate end to end and
//! returns either a short pass detail or a failure description. Checks are
//! run behind a panic guard so one broken claim cannot take the whole table
//! down with it. The ground-truth tables are embedded here rather than
//! shared with the unit tests, so the installed binary can self-check
//! without the test harness.

use std::panic::catch_unwind;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::core::{
    asm_to_corner_sum, asm_to_monotone, asm_to_six_vertex, coloring_to_height, corner_sum_to_asm,
    corner_sum_to_height, height_to_coloring, height_to_corner_sum, monotone_to_asm,
    six_vertex_to_asm, tile_glyph_grid, tile_type_map, validate_asm, Asm, HeightFunction,
};
use crate::enumerate::{
    catalan3_coefficients, count_formula, enumerate_asms, half_2_enumeration,
    half_average_property, hankel_identity, hybrid_2_enumeration, transfer_count, x_enumeration,
    HalfSpec, HybridPhase, COUNTS,
};
use crate::fpl::{count_by_link_pattern, nested_pattern, wieland_check, wilson_fraction};
use crate::lattice::count_ideals;
use crate::recurrence::{audit_cube, audit_octahedron, cube, extract_pairs, octahedron};
use crate::sample::{
    cftp_sample, cftp_sample_with_budget, frozen_map, glauber_step, FrozenMap, RandomSource,
    DEFAULT_WINDOW_BUDGET,
};

/// The complete order-3 family with its companion forms, in the canonical
/// order used throughout the crate, plus one order-4 example.
const ORDER3_MATRICES: [[[i64; 3]; 3]; 7] = [
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[0, 1, 0], [1, -1, 1], [0, 1, 0]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
];

const ORDER3_CORNER_SUMS: [[[i64; 4]; 4]; 7] = [
    [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
    [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
];

const ORDER3_HEIGHTS: [[[i64; 4]; 4]; 7] = [
    [[0, 1, 2, 3], [1, 2, 3, 2], [2, 3, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 3, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 1, 2], [2, 3, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
    [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
];

const ORDER3_TRIANGLES: [[&[i64]; 3]; 7] = [
    [&[3], &[2, 3], &[1, 2, 3]],
    [&[3], &[1, 3], &[1, 2, 3]],
    [&[2], &[2, 3], &[1, 2, 3]],
    [&[2], &[1, 3], &[1, 2, 3]],
    [&[2], &[1, 2], &[1, 2, 3]],
    [&[1], &[1, 3], &[1, 2, 3]],
    [&[1], &[1, 2], &[1, 2, 3]],
];

const ORDER3_GLYPHS: [&str; 7] = [
    ">>+\n>+<\n+<<\n",
    ">>+\n+^<\nv+<\n",
    ">+^\n>v+\n+<<\n",
    ">+^\n+-+\nv+<\n",
    ">+^\n+<^\nvv+\n",
    "+^^\nv>+\nv+<\n",
    "+^^\nv+^\nvv+\n",
];

const ORDER4_MATRIX: [[i64; 4]; 4] = [[0, 1, 0, 0], [1, -1, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]];

const ORDER4_TRIANGLE: [&[i64]; 4] = [&[2], &[1, 3], &[1, 3, 4], &[1, 2, 3, 4]];

/// Pinned sample: order 5, seed 42 coalesces at window 256 on this matrix.
const SEED42_ORDER5: [[i64; 5]; 5] = [
    [0, 0, 1, 0, 0],
    [0, 1, -1, 1, 0],
    [0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0],
    [1, 0, 0, 0, 0],
];

type Check = fn() -> Result<String, String>;

/// One executed check: its 1-based index, short name, and pass detail or
/// failure description.
pub struct CheckOutcome {
    pub index: usize,
    pub name: &'static str,
    pub result: Result<String, String>,
}

/// Runs every check, or just the 1-based `only` index, in order.
pub fn run_all(only: Option<usize>) -> Vec<CheckOutcome> {
    let checks: [(&'static str, Check); 10] = [
        ("counting-agreement", check_counting_agreement),
        ("order3-atlas", check_order3_atlas),
        ("round-trips", check_round_trips),
        ("weighted-identities", check_weighted_identities),
        ("hybrid-factorization", check_hybrid_factorization),
        ("half-boards", check_half_boards),
        ("loop-statistics", check_loop_statistics),
        ("hankel-identity", check_hankel_identity),
        ("sampler", check_sampler),
        ("recurrences", check_recurrences),
    ];
    checks
        .iter()
        .enumerate()
        .filter(|(i, _)| only.map_or(true, |k| k == i + 1))
        .map(|(i, &(name, check))| CheckOutcome {
            index: i + 1,
            name,
            result: run_guarded(check),
        })
        .collect()
}

fn run_guarded(check: Check) -> Result<String, String> {
    match catch_unwind(check) {
        Ok(result) => result,
        Err(payload) => {
            if let Some(s) = payload.downcast_ref::<&str>() {
                Err(format!("panicked: {s}"))
            } else if let Some(s) = payload.downcast_ref::<String>() {
                Err(format!("panicked: {s}"))
            } else {
                Err("panicked".to_string())
            }
        }
    }
}

fn known_count(n: usize) -> BigUint {
    COUNTS[n - 1].parse().expect("the count table holds decimal integers")
}

fn rows3(m: &[[i64; 3]; 3]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn rows4(m: &[[i64; 4]; 4]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn check_counting_agreement() -> Result<String, String> {
    for n in 1..=6 {
        let expected = known_count(n);
        let formula = count_formula(n);
        let brute = BigUint::from(enumerate_asms(n).count());
        let transfer = transfer_count(n);
        let ideals = count_ideals(n);
        if formula != expected || brute != expected || transfer != expected || ideals != expected {
            return Err(format!(
                "order {n}: formula {formula}, enumeration {brute}, transfer {transfer}, \
                 ideals {ideals}, expected {expected}"
            ));
        }
    }
    Ok("formula, enumeration, transfer, and ideal counts agree at orders 1..6".into())
}

fn check_order3_atlas() -> Result<String, String> {
    for (idx, m) in ORDER3_MATRICES.iter().enumerate() {
        let a = validate_asm(&rows3(m)).map_err(|e| format!("matrix {idx}: {e}"))?;
        let c = asm_to_corner_sum(&a);
        if c.to_rows() != rows4(&ORDER3_CORNER_SUMS[idx]) {
            return Err(format!("matrix {idx}: corner sums differ from the table"));
        }
        let h = corner_sum_to_height(&c);
        if h.to_rows() != rows4(&ORDER3_HEIGHTS[idx]) {
            return Err(format!("matrix {idx}: heights differ from the table"));
        }
        let coloring = height_to_coloring(&h);
        let expected_coloring: Vec<Vec<i64>> = ORDER3_HEIGHTS[idx]
            .iter()
            .map(|row| row.iter().map(|v| v.rem_euclid(3)).collect())
            .collect();
        if coloring.to_rows() != expected_coloring {
            return Err(format!("matrix {idx}: coloring is not the height table mod 3"));
        }
        let triangle = asm_to_monotone(&a);
        let expected_triangle: Vec<Vec<i64>> =
            ORDER3_TRIANGLES[idx].iter().map(|r| r.to_vec()).collect();
        if triangle.to_rows() != expected_triangle {
            return Err(format!("matrix {idx}: triangle differs from the table"));
        }
        let state = asm_to_six_vertex(&a);
        if tile_glyph_grid(&tile_type_map(&state), 3) != ORDER3_GLYPHS[idx] {
            return Err(format!("matrix {idx}: tile glyphs differ from the table"));
        }
        let lifted = coloring_to_height(&coloring).map_err(|e| format!("matrix {idx}: {e}"))?;
        if corner_sum_to_asm(&c) != a
            || height_to_corner_sum(&h) != c
            || lifted != h
            || monotone_to_asm(&triangle) != a
            || six_vertex_to_asm(&state) != a
        {
            return Err(format!("matrix {idx}: a reverse conversion does not return"));
        }
    }
    let order4 =
        validate_asm(&rows4(&ORDER4_MATRIX)).map_err(|e| format!("order-4 example: {e}"))?;
    let expected: Vec<Vec<i64>> = ORDER4_TRIANGLE.iter().map(|r| r.to_vec()).collect();
    if asm_to_monotone(&order4).to_rows() != expected {
        return Err("order-4 example: triangle differs from the table".into());
    }
    let mut all: Vec<Vec<Vec<i64>>> = enumerate_asms(3).map(|a| a.to_rows()).collect();
    all.sort();
    let mut atlas: Vec<Vec<Vec<i64>>> = ORDER3_MATRICES.iter().map(rows3).collect();
    atlas.sort();
    if all != atlas {
        return Err("enumeration does not produce exactly the embedded family".into());
    }
    Ok("seven order-3 objects and the order-4 triangle match the embedded atlas".into())
}

fn round_trip(a: &Asm) -> Result<(), String> {
    let c = asm_to_corner_sum(a);
    if corner_sum_to_asm(&c) != *a {
        return Err("corner-sum round trip failed".into());
    }
    let h = corner_sum_to_height(&c);
    if height_to_corner_sum(&h) != c {
        return Err("height round trip failed".into());
    }
    let coloring = height_to_coloring(&h);
    match coloring_to_height(&coloring) {
        Ok(back) if back == h => {}
        _ => return Err("coloring round trip failed".into()),
    }
    let triangle = asm_to_monotone(a);
    if monotone_to_asm(&triangle) != *a {
        return Err("triangle round trip failed".into());
    }
    let state = asm_to_six_vertex(a);
    if six_vertex_to_asm(&state) != *a {
        return Err("vertex round trip failed".into());
    }
    Ok(())
}

fn check_round_trips() -> Result<String, String> {
    for (idx, a) in enumerate_asms(5).enumerate() {
        round_trip(&a).map_err(|e| format!("order-5 matrix {idx}: {e}"))?;
    }
    for n in [8usize, 10] {
        (0..1000u64)
            .into_par_iter()
            .try_for_each(|k| {
                let seed = ((n as u64) << 32) | k;
                let a = cftp_sample(n, &RandomSource::new(seed))
                    .map_err(|e| format!("order {n}, seed {seed}: {e}"))?;
                round_trip(&a).map_err(|e| format!("order {n}, seed {seed}: {e}"))
            })?;
    }
    Ok("all 429 order-5 matrices and 1000 samples each at orders 8 and 10 round-trip".into())
}

fn check_weighted_identities() -> Result<String, String> {
    for n in 1..=10 {
        let two = x_enumeration(n, &BigRational::from_integer(BigInt::from(2)));
        let expected_two =
            BigRational::from_integer(BigInt::from(2).pow((n * (n - 1) / 2) as u32));
        if two != expected_two {
            return Err(format!("order {n}: 2-enumeration {two}, expected {expected_two}"));
        }
        let ones = x_enumeration(n, &BigRational::one());
        let expected_ones = BigRational::from_integer(BigInt::from(known_count(n)));
        if ones != expected_ones {
            return Err(format!("order {n}: 1-enumeration {ones}, expected {expected_ones}"));
        }
    }
    Ok("the x = 2 and x = 1 specializations match the closed forms at orders 1..10".into())
}

fn check_hybrid_factorization() -> Result<String, String> {
    for n in 1..=8 {
        for phase in [HybridPhase::OriginEven, HybridPhase::OriginOdd] {
            let report = hybrid_2_enumeration(n, phase)
                .map_err(|e| format!("order {n}, {}: {e}", phase.name()))?;
            let rebuilt = BigUint::from(2u32).pow(report.two_exponent as u32)
                * BigUint::from(5u32).pow(report.five_exponent as u32);
            if rebuilt != report.total {
                return Err(format!(
                    "order {n}, {}: {} is not 2^{} * 5^{}",
                    phase.name(),
                    report.total,
                    report.two_exponent,
                    report.five_exponent
                ));
            }
        }
    }
    Ok("both checkerboard phases factor as 2^a * 5^b at orders 1..8".into())
}

fn check_half_boards() -> Result<String, String> {
    for n in 1..=5usize {
        let mut total = BigUint::zero();
        for mask in 0..1u32 << n {
            let pattern: Vec<i8> =
                (0..n).map(|j| if mask >> j & 1 == 1 { 1 } else { -1 }).collect();
            let spec = HalfSpec::fixed_alternating(&pattern).map_err(|e| e.to_string())?;
            total += half_2_enumeration(&spec);
        }
        let expected = BigUint::from(2u32).pow((n * n) as u32);
        if total != expected {
            return Err(format!("order {n}: fixed-pattern sum {total}, expected {expected}"));
        }
    }
    let free_expected = [2u64, 20, 896, 177408];
    for n in 1..=4usize {
        let spec = HalfSpec::free_bottom(n).map_err(|e| e.to_string())?;
        let got = half_2_enumeration(&spec);
        if got != BigUint::from(free_expected[n - 1]) {
            return Err(format!(
                "order {n}: free-bottom weight {got}, expected {}",
                free_expected[n - 1]
            ));
        }
    }
    for n in 1..=6 {
        if !half_average_property(n).all_equal {
            return Err(format!("order {n}: class averages differ"));
        }
    }
    Ok("fixed-pattern sums, free-bottom weights, and class averages hold".into())
}

fn check_loop_statistics() -> Result<String, String> {
    for n in 1..=6usize {
        let histogram = count_by_link_pattern(n).map_err(|e| format!("order {n}: {e}"))?;
        let total: BigUint = histogram.values().sum();
        if total != known_count(n) {
            return Err(format!(
                "order {n}: histogram total {total}, expected {}",
                known_count(n)
            ));
        }
        if n >= 2 {
            let nested = histogram.get(&nested_pattern(n)).cloned().unwrap_or_default();
            if nested != known_count(n - 1) {
                return Err(format!(
                    "order {n}: nested count {nested}, expected {}",
                    known_count(n - 1)
                ));
            }
        }
        let wilson = wilson_fraction(n).map_err(|e| format!("order {n}: {e}"))?;
        if !wilson.equal {
            return Err(format!(
                "order {n}: stub-link count {} differs from the predicted {}",
                wilson.linked_count, wilson.predicted
            ));
        }
    }
    for n in 1..=5 {
        let report = wieland_check(n).map_err(|e| format!("order {n}: {e}"))?;
        if !report.invariant() {
            return Err(format!("order {n}: histogram is not rotation and reflection invariant"));
        }
    }
    Ok("histogram totals, nesting, stub links, and invariance hold".into())
}

fn check_hankel_identity() -> Result<String, String> {
    for n in 1..=6 {
        let report = hankel_identity(n).map_err(|e| format!("order {n}: {e}"))?;
        if !report.equal {
            return Err(format!(
                "order {n}: determinant {} differs from the predicted {}",
                report.determinant, report.predicted
            ));
        }
    }
    // Recompute the first three series coefficients from scratch: coefficient
    // k of (1 - (1 - 9t)^(1/3)) / (3t), expanded by the generalized binomial
    // series rather than the term-ratio recurrence the library uses.
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let mut binomial = BigRational::one();
    let mut recomputed = Vec::new();
    for m in 1..=3i64 {
        binomial *= (&third - BigRational::from_integer(BigInt::from(m - 1)))
            / BigRational::from_integer(BigInt::from(m));
        let series_term = &binomial * BigRational::from_integer(BigInt::from(-9).pow(m as u32));
        let coefficient = -series_term / BigRational::from_integer(BigInt::from(3));
        if !coefficient.is_integer() {
            return Err(format!("coefficient {} is not an integer: {coefficient}", m - 1));
        }
        let value = coefficient
            .to_integer()
            .to_biguint()
            .ok_or_else(|| format!("coefficient {} is negative", m - 1))?;
        recomputed.push(value);
    }
    let expected = catalan3_coefficients(3).map_err(|e| e.to_string())?;
    if recomputed != expected {
        return Err(format!(
            "binomial expansion gives {recomputed:?}, the series recurrence gives {expected:?}"
        ));
    }
    Ok("determinants match the closed form at orders 1..6; leading coefficients re-derived".into())
}

fn height_le(low: &HeightFunction, high: &HeightFunction) -> bool {
    let n = low.order();
    (0..=n).all(|i| (0..=n).all(|j| low.value(i, j) <= high.value(i, j)))
}

fn corner_blocks_frozen(map: &FrozenMap) -> bool {
    let bands = [1usize..=5, 35..=39];
    bands.iter().all(|rows| {
        bands
            .iter()
            .all(|cols| rows.clone().all(|i| cols.clone().all(|j| map.flag(i, j))))
    })
}

fn check_sampler() -> Result<String, String> {
    // Uniformity over the seven order-3 states: 70,000 independent seeds,
    // cutoff at the 0.001 tail of chi-square with 6 degrees of freedom.
    let table: Vec<Vec<Vec<i64>>> = ORDER3_MATRICES.iter().map(rows3).collect();
    let indices = (0..70_000u64)
        .into_par_iter()
        .map(|k| {
            let seed = 1_000_000 + k;
            let a = cftp_sample(3, &RandomSource::new(seed))
                .map_err(|e| format!("seed {seed}: {e}"))?;
            table
                .iter()
                .position(|rows| *rows == a.to_rows())
                .ok_or_else(|| format!("seed {seed}: sampled an unknown matrix"))
        })
        .collect::<Result<Vec<usize>, String>>()?;
    let mut counts = [0u64; 7];
    for idx in indices {
        counts[idx] += 1;
    }
    let expected = 10_000f64;
    let chi_square: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    if chi_square >= 22.4577 {
        return Err(format!(
            "chi-square {chi_square:.3} exceeds the 22.4577 cutoff; counts {counts:?}"
        ));
    }
    // Single-site updates preserve pointwise order, exhaustively at order 4.
    let heights: Vec<HeightFunction> = enumerate_asms(4)
        .map(|a| corner_sum_to_height(&asm_to_corner_sum(&a)))
        .collect();
    let rng = RandomSource::new(977);
    for low in &heights {
        for high in &heights {
            if !height_le(low, high) {
                continue;
            }
            for t in 0..100 {
                let v = rng.value(t);
                let site = (1 + (v % 3) as usize, 1 + ((v >> 2) % 3) as usize);
                let coin = (v >> 4) & 1 == 1;
                if !height_le(&glauber_step(low, site, coin), &glauber_step(high, site, coin)) {
                    return Err(format!("update at {site:?} with coin {coin} breaks the order"));
                }
            }
        }
    }
    // Fixed-seed determinism against the pinned sample, twice.
    let first = cftp_sample_with_budget(5, &RandomSource::new(42), DEFAULT_WINDOW_BUDGET)
        .map_err(|e| e.to_string())?;
    let second = cftp_sample_with_budget(5, &RandomSource::new(42), DEFAULT_WINDOW_BUDGET)
        .map_err(|e| e.to_string())?;
    let golden: Vec<Vec<i64>> = SEED42_ORDER5.iter().map(|r| r.to_vec()).collect();
    if first.window != 256 || first.asm.to_rows() != golden {
        return Err("seed 42 at order 5 no longer reproduces its pinned sample".into());
    }
    if second.window != first.window || second.asm != first.asm {
        return Err("two runs with seed 42 disagree".into());
    }
    // Frozen corners at order 40: the interior 5x5 corner blocks lie outside
    // the central disorder region, so nearly every sample freezes them. The
    // 90-of-100 cutoff is a smoke threshold chosen for this artifact, not a
    // limit statement.
    let frozen_flags = (0..100u64)
        .into_par_iter()
        .map(|k| {
            let seed = 3_000 + k;
            let a = cftp_sample(40, &RandomSource::new(seed))
                .map_err(|e| format!("seed {seed}: {e}"))?;
            let map = frozen_map(&corner_sum_to_height(&asm_to_corner_sum(&a)));
            Ok(corner_blocks_frozen(&map))
        })
        .collect::<Result<Vec<bool>, String>>()?;
    let hits = frozen_flags.iter().filter(|&&b| b).count();
    if hits < 90 {
        return Err(format!("only {hits}/100 order-40 samples froze all four corner blocks"));
    }
    Ok(format!(
        "uniform (chi-square {chi_square:.2}), monotone, deterministic, {hits}/100 frozen corners"
    ))
}

fn check_recurrences() -> Result<String, String> {
    let one = BigInt::one();
    for n in 1..=4usize {
        let poly = octahedron(n, &one);
        let expected = 1usize << (n * (n + 1) / 2);
        let count = audit_octahedron(&poly).map_err(|e| format!("level {n}: {e}"))?;
        if count != expected {
            return Err(format!("level {n}: {count} terms, expected {expected}"));
        }
        if poly.evaluate_at_one() != BigInt::from(expected) {
            return Err(format!("level {n}: the all-ones specialization is not {expected}"));
        }
        let pairs = extract_pairs(&poly).map_err(|e| format!("level {n} pairs: {e}"))?;
        if pairs.len() != expected {
            return Err(format!("level {n}: {} pairs decoded, expected {expected}", pairs.len()));
        }
        if n == 2 {
            let mut uppers: Vec<Vec<Vec<i64>>> =
                pairs.iter().map(|p| p.upper.to_rows()).collect();
            uppers.sort();
            let mut family: Vec<Vec<Vec<i64>>> = ORDER3_MATRICES.iter().map(rows3).collect();
            family.push(rows3(&ORDER3_MATRICES[3]));
            family.sort();
            if uppers != family {
                return Err(
                    "level 2: decoded uppers are not the order-3 family with its center twice"
                        .into(),
                );
            }
        }
    }
    for lambda in [BigInt::from(-1), BigInt::from(2)] {
        for n in 1..=3usize {
            let poly = octahedron(n, &lambda);
            let expected = 1usize << (n * (n + 1) / 2);
            if poly.num_terms() != expected {
                return Err(format!(
                    "weight {lambda}, level {n}: {} terms, expected {expected}",
                    poly.num_terms()
                ));
            }
        }
    }
    for n in 1..=4usize {
        let poly = cube(n);
        let expected = 3usize.pow((n * n / 4) as u32);
        let count = audit_cube(&poly).map_err(|e| format!("cube level {n}: {e}"))?;
        if count != expected {
            return Err(format!("cube level {n}: {count} terms, expected {expected}"));
        }
    }
    Ok("octahedron and cube towers audit, pairs decode, specializations match".into())
}
