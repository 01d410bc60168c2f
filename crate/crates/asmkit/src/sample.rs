//! Perfect uniform sampling of alternating-sign matrices and renderers for
//! the square-tiling picture of a sample.
//!
//! Sampling works on height functions. The single-site update
//! [`glauber_step`] looks at one interior site: when all four neighbours
//! carry the same value `v`, the site is set to `v + 1` or `v - 1` according
//! to a coin, otherwise nothing changes. Both moves are chosen with equal
//! probability, so the walk satisfies detailed balance with respect to the
//! uniform distribution, and the update is monotone: applying the same
//! `(site, coin)` pair to two pointwise-ordered height functions keeps them
//! ordered.
//!
//! [`cftp_sample`] turns the walk into a perfect sampler by coupling from
//! the past. Two chains start a window of `T` steps in the past, one at the
//! maximal height function and one at the minimal one, and both consume the
//! same `(site, coin)` sequence. If they meet by time zero, monotonicity
//! sandwiches every other trajectory in between and the common state is an
//! exact uniform sample; otherwise the window doubles and the run is
//! replayed with the same randomness in the overlap. Randomness is addressed
//! by absolute position in the past: the step performed `t` steps before
//! time zero always uses [`RandomSource::value`]`(t)`, no matter which
//! window it belongs to.
//!
//! A [`RandomSource`] is a pure function of `(seed, counter)`, so a sampler
//! never mutates shared state: a fixed seed reproduces the same matrix and
//! the same coalescence window on every platform and under any thread
//! schedule. One sampler runs single-threaded; to draw many samples
//! concurrently, give each its own seed.
//!
//! [`render_tiling`] draws the six-vertex tiling of a matrix as plain glyph
//! text, a binary PPM raster, or an SVG document, using one fixed colour per
//! tile kind.

use std::error::Error;
use std::fmt;
use std::fmt::Write as _;

use crate::core::{
    corner_sum_to_asm, height_to_corner_sum, tile_glyph_grid, tile_type_map, Asm, HeightFunction,
    SixVertexState,
};

/// Errors raised by the sampling and rendering operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleError {
    /// Coupling from the past exhausted its window budget without the two
    /// extreme chains meeting.
    CoalescenceTimeout { window: u64 },
    /// [`render_tiling`] was asked for an output format it does not know.
    UnsupportedFormat { format: String },
}

impl fmt::Display for SampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleError::CoalescenceTimeout { window } => write!(
                f,
                "chains did not coalesce within a window of {window} steps"
            ),
            SampleError::UnsupportedFormat { format } => write!(
                f,
                "unsupported rendering format {format:?}, expected text, ppm, or svg"
            ),
        }
    }
}

impl Error for SampleError {}

/// Deterministic counter-addressed randomness.
///
/// `value(t)` applies the SplitMix64 output permutation to
/// `seed + t * 0x9E3779B97F4A7C15` (the odd constant is `2^64` divided by
/// the golden ratio, SplitMix64's stream increment), so the value at any
/// counter is a pure function of the seed and the counter. Calls may happen
/// in any order and from any thread without changing the stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSource {
    seed: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The 64-bit value at position `t` of the stream.
    pub fn value(&self, t: u64) -> u64 {
        let mut z = self.seed.wrapping_add(t.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Splits one stream value into an interior site and a coin.
///
/// The low bit is the coin; the remaining bits pick one of the `(n - 1)^2`
/// interior sites in row-major order, `(i, j) = (1 + s / (n-1), 1 + s % (n-1))`.
fn decode_move(n: usize, v: u64) -> (usize, usize, bool) {
    let m = (n - 1) as u64;
    let s = (v >> 1) % (m * m);
    (1 + (s / m) as usize, 1 + (s % m) as usize, v & 1 == 1)
}

/// The single-site move on a raw `(n + 1) x (n + 1)` grid of values.
fn flip_site(values: &mut [i32], n: usize, i: usize, j: usize, coin: bool) {
    let w = n + 1;
    let up = values[(i - 1) * w + j];
    if up == values[(i + 1) * w + j]
        && up == values[i * w + j - 1]
        && up == values[i * w + j + 1]
    {
        values[i * w + j] = if coin { up + 1 } else { up - 1 };
    }
}

fn apply_move(values: &mut [i32], n: usize, v: u64) {
    let (i, j, coin) = decode_move(n, v);
    flip_site(values, n, i, j, coin);
}

fn extreme_grid(n: usize, high: bool) -> Vec<i32> {
    let w = n + 1;
    let mut values = Vec::with_capacity(w * w);
    for i in 0..w {
        for j in 0..w {
            let v = if high {
                (i + j).min(2 * n - i - j) as i32
            } else {
                (i as i32 - j as i32).abs()
            };
            values.push(v);
        }
    }
    values
}

/// The maximal and minimal height functions of order `n`, in that order.
///
/// The maximum is `min(i + j, 2n - i - j)` and the minimum is `|i - j|`;
/// every order-`n` height function lies between them pointwise. At `n = 1`
/// the two coincide.
pub fn extreme_heights(n: usize) -> (HeightFunction, HeightFunction) {
    assert!(n >= 1, "order must be positive");
    (
        HeightFunction::from_values_unchecked(n, extreme_grid(n, true)),
        HeightFunction::from_values_unchecked(n, extreme_grid(n, false)),
    )
}

/// One step of the single-site walk, as a pure function.
///
/// `site` must be an interior site, `1 <= i, j <= n - 1`. When the four
/// neighbours of `site` share a value `v`, the result carries `v + 1` there
/// if `coin` is set and `v - 1` otherwise; in every other case the input is
/// returned unchanged. The result is always a valid height function.
pub fn glauber_step(h: &HeightFunction, site: (usize, usize), coin: bool) -> HeightFunction {
    let n = h.order();
    let (i, j) = site;
    assert!(
        n >= 2 && (1..n).contains(&i) && (1..n).contains(&j),
        "site must be interior"
    );
    let mut values = h.values().to_vec();
    flip_site(&mut values, n, i, j, coin);
    HeightFunction::from_values_unchecked(n, values)
}

/// Window budget used by [`cftp_sample`] before giving up.
pub const DEFAULT_WINDOW_BUDGET: u64 = 1 << 30;

/// A perfect sample together with the window at which the chains met.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CftpOutcome {
    pub asm: Asm,
    /// Number of steps in the past at which the run started.
    pub window: u64,
}

/// Draws one exact uniform sample of order `n` with the default budget.
pub fn cftp_sample(n: usize, rng: &RandomSource) -> Result<Asm, SampleError> {
    cftp_sample_with_budget(n, rng, DEFAULT_WINDOW_BUDGET).map(|out| out.asm)
}

/// Coupling from the past with an explicit window budget.
///
/// Windows grow as `1, 2, 4, ...`; the step `t` positions before time zero
/// always consumes `rng.value(t)`, so a longer window replays the shorter
/// ones exactly. Returns [`SampleError::CoalescenceTimeout`] if the chains
/// are still apart when the window exceeds `max_window`. The order-1 walk
/// has no interior site and returns immediately with window 0.
pub fn cftp_sample_with_budget(
    n: usize,
    rng: &RandomSource,
    max_window: u64,
) -> Result<CftpOutcome, SampleError> {
    assert!(n >= 1, "order must be positive");
    if n == 1 {
        let asm = Asm::from_fn(1, |_, _| 1).expect("the order-1 matrix is valid");
        return Ok(CftpOutcome { asm, window: 0 });
    }
    let high = extreme_grid(n, true);
    let low = extreme_grid(n, false);
    let mut window: u64 = 1;
    loop {
        let mut top = high.clone();
        let mut bottom = low.clone();
        for t in (1..=window).rev() {
            let v = rng.value(t);
            apply_move(&mut top, n, v);
            apply_move(&mut bottom, n, v);
        }
        if top == bottom {
            let h = HeightFunction::from_values_unchecked(n, top);
            let asm = corner_sum_to_asm(&height_to_corner_sum(&h));
            return Ok(CftpOutcome { asm, window });
        }
        if window >= max_window {
            return Err(SampleError::CoalescenceTimeout { window });
        }
        window *= 2;
    }
}

/// Per-site flags marking where a height function is pinned to an extreme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenMap {
    n: usize,
    flags: Vec<bool>,
}

impl FrozenMap {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Whether the height at `(i, j)` equals the maximal or minimal value
    /// possible there. Boundary sites are always frozen.
    pub fn flag(&self, i: usize, j: usize) -> bool {
        self.flags[i * (self.n + 1) + j]
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.flags
            .chunks(self.n + 1)
            .map(|row| row.to_vec())
            .collect()
    }

    pub fn frozen_count(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }
}

/// Flags every site where `h` meets the pointwise maximum
/// `min(i + j, 2n - i - j)` or the pointwise minimum `|i - j|`.
pub fn frozen_map(h: &HeightFunction) -> FrozenMap {
    let n = h.order();
    let mut flags = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            let v = h.value(i, j);
            let hi = (i + j).min(2 * n - i - j) as i32;
            let lo = (i as i32 - j as i32).abs();
            flags.push(v == hi || v == lo);
        }
    }
    FrozenMap { n, flags }
}

/// Fill colours of the six tiles, indexed by [`crate::core::TileKind::index`]:
/// entry `+1`, entry `-1`, then the northeast, southwest, northwest, and
/// southeast baskets.
pub const TILE_COLORS: [&str; 6] = [
    "#d62728", "#1f77b4", "#2ca02c", "#8c564b", "#9467bd", "#ff7f0e",
];

const TILE_RGB: [[u8; 3]; 6] = [
    [0xd6, 0x27, 0x28],
    [0x1f, 0x77, 0xb4],
    [0x2c, 0xa0, 0x2c],
    [0x8c, 0x56, 0x4b],
    [0x94, 0x67, 0xbd],
    [0xff, 0x7f, 0x0e],
];

/// Side length, in pixels, of one cell of the PPM raster.
const PPM_CELL: usize = 8;

/// Side length, in SVG user units, of one tile rectangle.
const SVG_CELL: usize = 16;

/// Renders the square tiling of a six-vertex state.
///
/// Formats: `"text"` gives one glyph per cell (`+ - > < ^ v`) and one line
/// per row; `"ppm"` gives a binary P6 image with an 8x8 pixel block per
/// cell; `"svg"` gives one `rect` per cell, classed by tile name. All three
/// colour or letter the cells by tile kind, with the fills of
/// [`TILE_COLORS`]. Any other format name is rejected.
pub fn render_tiling(state: &SixVertexState, format: &str) -> Result<Vec<u8>, SampleError> {
    match format {
        "text" => Ok(render_text(state).into_bytes()),
        "ppm" => Ok(render_ppm(state)),
        "svg" => Ok(render_svg(state).into_bytes()),
        other => Err(SampleError::UnsupportedFormat {
            format: other.to_string(),
        }),
    }
}

fn render_text(state: &SixVertexState) -> String {
    tile_glyph_grid(&tile_type_map(state), state.order())
}

fn render_ppm(state: &SixVertexState) -> Vec<u8> {
    let n = state.order();
    let tiles = tile_type_map(state);
    let side = n * PPM_CELL;
    let mut out = format!("P6\n{side} {side}\n255\n").into_bytes();
    out.reserve(side * side * 3);
    for py in 0..side {
        let r = py / PPM_CELL;
        for c in 0..n {
            let rgb = TILE_RGB[tiles[r * n + c].index()];
            for _ in 0..PPM_CELL {
                out.extend_from_slice(&rgb);
            }
        }
    }
    out
}

fn render_svg(state: &SixVertexState) -> String {
    let n = state.order();
    let tiles = tile_type_map(state);
    let side = n * SVG_CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{side}\" height=\"{side}\" \
         viewBox=\"0 0 {side} {side}\">"
    );
    for r in 0..n {
        for c in 0..n {
            let tile = tiles[r * n + c];
            let _ = writeln!(
                out,
                "  <rect class=\"{}\" x=\"{}\" y=\"{}\" width=\"{SVG_CELL}\" \
                 height=\"{SVG_CELL}\" fill=\"{}\"/>",
                tile.name(),
                c * SVG_CELL,
                r * SVG_CELL,
                TILE_COLORS[tile.index()],
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use rayon::prelude::*;

    use super::*;
    use crate::core::{asm_to_corner_sum, asm_to_six_vertex, corner_sum_to_height, test_atlas};
    use crate::enumerate::enumerate_asms;

    fn height_of(a: &Asm) -> HeightFunction {
        corner_sum_to_height(&asm_to_corner_sum(a))
    }

    fn all_heights(n: usize) -> Vec<HeightFunction> {
        enumerate_asms(n).map(|a| height_of(&a)).collect()
    }

    #[test]
    fn counter_values_match_the_reference_stream() {
        let zero = RandomSource::new(0);
        assert_eq!(
            (0..4).map(|t| zero.value(t)).collect::<Vec<_>>(),
            vec![
                0,
                16294208416658607535,
                7960286522194355700,
                487617019471545679,
            ]
        );
        let seeded = RandomSource::new(42);
        assert_eq!(
            (0..4).map(|t| seeded.value(t)).collect::<Vec<_>>(),
            vec![
                12058926934050108962,
                13679457532755275413,
                2949826092126892291,
                5139283748462763858,
            ]
        );
        assert_eq!(seeded.value(2), seeded.value(2));
        assert_eq!(seeded.seed(), 42);
    }

    #[test]
    fn moves_decode_to_interior_sites() {
        let rng = RandomSource::new(42);
        let decoded: Vec<_> = (0..6).map(|t| decode_move(3, rng.value(t))).collect();
        assert_eq!(
            decoded,
            vec![
                (1, 2, false),
                (2, 1, true),
                (1, 2, true),
                (1, 2, false),
                (2, 1, false),
                (1, 2, false),
            ]
        );
        for n in 2..6 {
            for t in 0..200 {
                let (i, j, _) = decode_move(n, rng.value(t));
                assert!((1..n).contains(&i) && (1..n).contains(&j));
            }
        }
    }

    #[test]
    fn extreme_heights_bound_every_height() {
        let (max1, min1) = extreme_heights(1);
        assert_eq!(max1, min1);
        assert_eq!(max1.to_rows(), vec![vec![0, 1], vec![1, 0]]);
        for n in 1..6 {
            let (max, min) = extreme_heights(n);
            HeightFunction::new(&max.to_rows()).unwrap();
            HeightFunction::new(&min.to_rows()).unwrap();
            for h in all_heights(n) {
                for i in 0..=n {
                    for j in 0..=n {
                        assert!(h.value(i, j) <= max.value(i, j));
                        assert!(h.value(i, j) >= min.value(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn flips_match_the_hand_worked_example() {
        let (max, _) = extreme_heights(3);
        // At (2, 2) the neighbours take two values, so the site is stuck.
        assert_eq!(glauber_step(&max, (2, 2), false), max);
        assert_eq!(glauber_step(&max, (2, 2), true), max);
        // At (1, 2) all four neighbours are 2: the coin picks 1 or 3.
        let lowered = glauber_step(&max, (1, 2), false);
        assert_eq!(
            lowered.to_rows(),
            vec![
                vec![0, 1, 2, 3],
                vec![1, 2, 1, 2],
                vec![2, 3, 2, 1],
                vec![3, 2, 1, 0],
            ]
        );
        assert_eq!(glauber_step(&max, (1, 2), true), max);
        assert_eq!(glauber_step(&lowered, (1, 2), true), max);
    }

    #[test]
    fn single_site_updates_preserve_validity() {
        for h in all_heights(4) {
            for i in 1..4 {
                for j in 1..4 {
                    for coin in [false, true] {
                        let next = glauber_step(&h, (i, j), coin);
                        HeightFunction::new(&next.to_rows()).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn single_site_updates_are_monotone() {
        let heights = all_heights(4);
        let rng = RandomSource::new(2024);
        let dominates = |a: &HeightFunction, b: &HeightFunction| {
            (0..=4).all(|i| (0..=4).all(|j| a.value(i, j) >= b.value(i, j)))
        };
        let mut pairs = 0;
        for upper in &heights {
            for lower in &heights {
                if !dominates(upper, lower) {
                    continue;
                }
                pairs += 1;
                for t in 0..100 {
                    let (i, j, coin) = decode_move(4, rng.value(t));
                    let next_upper = glauber_step(upper, (i, j), coin);
                    let next_lower = glauber_step(lower, (i, j), coin);
                    assert!(dominates(&next_upper, &next_lower));
                }
            }
        }
        assert!(pairs > 42, "the order should relate more than the diagonal");
    }

    #[test]
    fn updates_satisfy_detailed_balance_on_order3() {
        // The uniform distribution is stationary iff the transition counts
        // over the 8 equally likely (site, coin) moves are symmetric.
        let heights = all_heights(3);
        let moves: Vec<(usize, usize, bool)> = (1..3)
            .flat_map(|i| (1..3).flat_map(move |j| [(i, j, false), (i, j, true)]))
            .collect();
        assert_eq!(moves.len(), 8);
        let mut counts = [[0u32; 7]; 7];
        for (x, h) in heights.iter().enumerate() {
            for &(i, j, coin) in &moves {
                let next = glauber_step(h, (i, j), coin);
                let y = heights.iter().position(|k| *k == next).unwrap();
                counts[x][y] += 1;
            }
        }
        for x in 0..7 {
            assert_eq!(counts[x].iter().sum::<u32>(), 8);
            for y in 0..7 {
                assert_eq!(counts[x][y], counts[y][x]);
            }
        }
        // Something must actually move, or the walk could not mix.
        assert!((0..7).any(|x| counts[x][x] < 8));
    }

    #[test]
    fn coupling_returns_the_order1_matrix_immediately() {
        let out = cftp_sample_with_budget(1, &RandomSource::new(9), 1).unwrap();
        assert_eq!(out.window, 0);
        assert_eq!(out.asm.to_rows(), vec![vec![1]]);
    }

    #[test]
    fn identical_seeds_reproduce_the_sample() {
        let first = cftp_sample_with_budget(5, &RandomSource::new(42), 1 << 20).unwrap();
        let second = cftp_sample_with_budget(5, &RandomSource::new(42), 1 << 20).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn seed42_order5_sample_is_pinned() {
        let out = cftp_sample_with_budget(5, &RandomSource::new(42), 1 << 20).unwrap();
        assert_eq!(out.window, 256);
        assert_eq!(
            out.asm.to_rows(),
            vec![
                vec![0, 0, 1, 0, 0],
                vec![0, 1, -1, 1, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 1, 0, 0],
                vec![1, 0, 0, 0, 0],
            ]
        );
    }

    #[test]
    fn samples_are_valid_and_round_trip() {
        for seed in 0..40 {
            let asm = cftp_sample(6, &RandomSource::new(seed)).unwrap();
            let validated = crate::core::validate_asm(&asm.to_rows()).unwrap();
            assert_eq!(validated, asm);
            let back = corner_sum_to_asm(&height_to_corner_sum(&height_of(&asm)));
            assert_eq!(back, asm);
        }
    }

    #[test]
    fn tiny_budget_times_out() {
        let err = cftp_sample_with_budget(4, &RandomSource::new(0), 1).unwrap_err();
        assert_eq!(err, SampleError::CoalescenceTimeout { window: 1 });
    }

    #[test]
    fn sampled_distribution_is_uniform_on_order3() {
        let states: Vec<Asm> = enumerate_asms(3).collect();
        let samples = 70_000u64;
        let counts = (0..samples)
            .into_par_iter()
            .fold(
                || vec![0u64; states.len()],
                |mut acc, seed| {
                    let asm = cftp_sample(3, &RandomSource::new(seed)).unwrap();
                    let idx = states.iter().position(|s| *s == asm).unwrap();
                    acc[idx] += 1;
                    acc
                },
            )
            .reduce(
                || vec![0u64; states.len()],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        let expected = samples as f64 / states.len() as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        // 0.999 quantile of chi-square with 6 degrees of freedom.
        assert!(chi2 < 22.4577, "chi-square too large: {chi2}, {counts:?}");
    }

    #[test]
    fn sampled_distribution_is_uniform_on_order4() {
        let states: Vec<Asm> = enumerate_asms(4).collect();
        let samples = 42_000u64;
        let counts = (0..samples)
            .into_par_iter()
            .fold(
                || vec![0u64; states.len()],
                |mut acc, seed| {
                    let asm = cftp_sample(4, &RandomSource::new(1 << 32 | seed)).unwrap();
                    let idx = states.iter().position(|s| *s == asm).unwrap();
                    acc[idx] += 1;
                    acc
                },
            )
            .reduce(
                || vec![0u64; states.len()],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        let expected = samples as f64 / states.len() as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        // 0.999 quantile of chi-square with 41 degrees of freedom.
        assert!(chi2 < 74.745, "chi-square too large: {chi2}, {counts:?}");
    }

    #[test]
    fn frozen_map_flags_extremes_and_mixed_states() {
        let (max, min) = extreme_heights(5);
        for h in [max, min] {
            let map = frozen_map(&h);
            assert_eq!(map.order(), 5);
            assert_eq!(map.frozen_count(), 36);
        }
        // Order 3 leaves at most one value between the extremes at every
        // site, so every state is fully frozen.
        for idx in 0..7 {
            let map = frozen_map(&height_of(&test_atlas::asm(idx)));
            assert!(map.rows().iter().flatten().all(|&b| b));
        }
        // Order 4 has room at the centre: some state is unfrozen there,
        // and boundary sites are frozen in every state.
        let mut unfrozen_centre = 0;
        for h in all_heights(4) {
            let map = frozen_map(&h);
            if !map.flag(2, 2) {
                unfrozen_centre += 1;
            }
            for k in 0..=4 {
                assert!(map.flag(0, k) && map.flag(4, k));
                assert!(map.flag(k, 0) && map.flag(k, 4));
            }
        }
        assert!(unfrozen_centre > 0);
    }

    #[test]
    fn palette_strings_match_the_rgb_table() {
        for (hex, rgb) in TILE_COLORS.iter().zip(TILE_RGB) {
            assert_eq!(**hex, format!("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]));
        }
    }

    #[test]
    fn renders_have_the_documented_shapes() {
        let identity = Asm::from_fn(2, |i, j| i8::from(i == j)).unwrap();
        let exchange = Asm::from_fn(2, |i, j| i8::from(i + j == 1)).unwrap();
        let identity_state = asm_to_six_vertex(&identity);
        let exchange_state = asm_to_six_vertex(&exchange);

        let text = render_tiling(&identity_state, "text").unwrap();
        assert_eq!(String::from_utf8(text).unwrap(), "+^\nv+\n");
        let text = render_tiling(&exchange_state, "text").unwrap();
        assert_eq!(String::from_utf8(text).unwrap(), ">+\n+<\n");

        let ppm = render_tiling(&identity_state, "ppm").unwrap();
        let header = b"P6\n16 16\n255\n";
        assert_eq!(&ppm[..header.len()], header);
        assert_eq!(ppm.len(), header.len() + 16 * 16 * 3);
        // Top-left pixel is a +1 tile, top-right a northwest basket.
        assert_eq!(&ppm[header.len()..header.len() + 3], &[0xd6, 0x27, 0x28]);
        assert_eq!(
            &ppm[header.len() + 15 * 3..header.len() + 16 * 3],
            &[0x94, 0x67, 0xbd]
        );

        let svg = String::from_utf8(render_tiling(&identity_state, "svg").unwrap()).unwrap();
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<rect").count(), 4);
        assert_eq!(svg.matches("class=\"gasket\"").count(), 2);
        assert!(svg.contains("#d62728") && svg.contains("#9467bd") && svg.contains("#ff7f0e"));

        assert_eq!(
            render_tiling(&identity_state, "gif").unwrap_err(),
            SampleError::UnsupportedFormat {
                format: "gif".into()
            }
        );
    }
}
