//! Loop states, link patterns, and the pattern-count identities.
//!
//! Orienting a six-vertex state and keeping exactly the edges that point
//! from an odd vertex to an even one (vertex `(i, j)` is even when `i + j`
//! is, anchored so the leftmost vertex of the top boundary row is even)
//! yields a fully packed loop state. Its open paths match the boundary
//! stubs into a non-crossing link pattern; tabulating patterns over all
//! states of one order supports the rotation-invariance and pattern-count
//! checks.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::core::{asm_to_six_vertex, boundary_stubs, crossing, FplState, LinkPattern,
    SixVertexState};
use crate::enumerate::{count_formula, enumerate_asms_with_top};

/// Failure of a loop-state operation.
#[derive(Debug, Clone, PartialEq)]
pub enum FplError {
    /// A path trace reached a vertex with no continuation.
    TraceStuck { at: (usize, usize) },
    /// Two traced chords interleave; impossible for valid states, so this
    /// signals corruption.
    CrossingDetected {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// The traced pairs do not form a valid pattern.
    PatternRejected { detail: String },
    /// The predicted pattern count is not an integer; this would refute
    /// the conjectured product at this order.
    NonIntegerPrediction { predicted: BigRational },
}

impl fmt::Display for FplError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FplError::TraceStuck { at } => {
                write!(f, "path trace stuck at vertex ({}, {})", at.0, at.1)
            }
            FplError::CrossingDetected { first, second } => {
                write!(f, "chords {first:?} and {second:?} cross")
            }
            FplError::PatternRejected { detail } => {
                write!(f, "traced pairs rejected: {detail}")
            }
            FplError::NonIntegerPrediction { predicted } => {
                write!(f, "predicted count {predicted} is not an integer")
            }
        }
    }
}

impl std::error::Error for FplError {}

/// An open path of a loop state: the stub indices it joins and its full
/// vertex walk from boundary to boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenPath {
    /// Stub indices, smaller first.
    pub ends: (usize, usize),
    /// Vertex walk on the `(n+2) x (n+2)` grid, outer end to outer end.
    pub vertices: Vec<(usize, usize)>,
}

/// The full path structure of a loop state: every kept edge lies on
/// exactly one open path or closed loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FplDecomposition {
    /// The non-crossing matching realized by the open paths.
    pub pattern: LinkPattern,
    /// Open paths ordered by their smaller stub index.
    pub open_paths: Vec<OpenPath>,
    /// Closed loops as vertex cycles (first vertex not repeated), each
    /// starting at its lexicographically smallest vertex.
    pub closed_loops: Vec<Vec<(usize, usize)>>,
}

/// Keeps the edges of `state` that point from an odd vertex to an even one.
///
/// Horizontal bit set means the edge points right, vertical bit set means
/// up; the tail vertex decides whether an edge survives.
pub fn six_vertex_to_fpl(state: &SixVertexState) -> FplState {
    let n = state.order();
    let horizontal: Vec<Vec<bool>> = (0..n)
        .map(|r| {
            (0..=n)
                .map(|s| {
                    if state.horizontal_right(r, s) {
                        (r + 1 + s) % 2 == 0
                    } else {
                        (r + s) % 2 == 0
                    }
                })
                .collect()
        })
        .collect();
    let vertical: Vec<Vec<bool>> = (0..=n)
        .map(|t| {
            (0..n)
                .map(|c| {
                    if state.vertical_up(t, c) {
                        (t + c) % 2 == 0
                    } else {
                        (t + c + 1) % 2 == 0
                    }
                })
                .collect()
        })
        .collect();
    FplState::new(n, &horizontal, &vertical).expect("parity selection keeps degree 2")
}

fn edge_key(
    u: (usize, usize),
    v: (usize, usize),
) -> ((usize, usize), (usize, usize)) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Traces every open path and closed loop of `state`.
///
/// Paths are walked from each boundary stub in index order; the leftover
/// edges decompose into loops. Internal degree 2 makes every step forced.
pub fn link_pattern(state: &FplState) -> Result<FplDecomposition, FplError> {
    let n = state.order();
    let stubs = boundary_stubs(n);
    let stub_at: std::collections::HashMap<(usize, usize), usize> =
        stubs.iter().map(|s| (s.outer, s.index)).collect();
    let mut used: HashSet<((usize, usize), (usize, usize))> = HashSet::new();
    let mut open_paths = Vec::new();
    let mut pairs = Vec::new();
    for stub in &stubs {
        if used.contains(&edge_key(stub.outer, stub.inner)) {
            continue;
        }
        let mut vertices = vec![stub.outer];
        let mut prev = stub.outer;
        let mut cur = stub.inner;
        used.insert(edge_key(prev, cur));
        let far_end = loop {
            vertices.push(cur);
            if let Some(&idx) = stub_at.get(&cur) {
                break idx;
            }
            match state.neighbors(cur).into_iter().find(|v| *v != prev) {
                Some(next) => {
                    used.insert(edge_key(cur, next));
                    prev = cur;
                    cur = next;
                }
                None => return Err(FplError::TraceStuck { at: cur }),
            }
        };
        pairs.push((stub.index, far_end));
        open_paths.push(OpenPath {
            ends: (stub.index.min(far_end), stub.index.max(far_end)),
            vertices,
        });
    }
    let mut closed_loops = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let start = (i, j);
            for first in state.neighbors(start) {
                if used.contains(&edge_key(start, first)) {
                    continue;
                }
                let mut cycle = vec![start];
                let mut prev = start;
                let mut cur = first;
                used.insert(edge_key(prev, cur));
                while cur != start {
                    cycle.push(cur);
                    match state.neighbors(cur).into_iter().find(|v| *v != prev) {
                        Some(next) => {
                            used.insert(edge_key(cur, next));
                            prev = cur;
                            cur = next;
                        }
                        None => return Err(FplError::TraceStuck { at: cur }),
                    }
                }
                closed_loops.push(cycle);
            }
        }
    }
    if let Some((first, second)) = crossing(&pairs) {
        return Err(FplError::CrossingDetected { first, second });
    }
    let pattern = LinkPattern::new(&pairs)
        .map_err(|e| FplError::PatternRejected { detail: e.to_string() })?;
    Ok(FplDecomposition {
        pattern,
        open_paths,
        closed_loops,
    })
}

/// The pattern pairing each odd stub with the following even stub:
/// `(1, 2), (3, 4), ..., (2n-1, 2n)`.
pub fn nested_pattern(n: usize) -> LinkPattern {
    let pairs: Vec<(usize, usize)> = (1..=n).map(|k| (2 * k - 1, 2 * k)).collect();
    LinkPattern::new(&pairs).expect("adjacent pairs never cross")
}

/// Relabels every stub `i` as `i + 1`, wrapping `2n` to `1`.
pub fn rotate_pattern(pattern: &LinkPattern) -> LinkPattern {
    let wrap = 2 * pattern.len();
    let pairs: Vec<(usize, usize)> = pattern
        .pairs()
        .iter()
        .map(|&(a, b)| (a % wrap + 1, b % wrap + 1))
        .collect();
    LinkPattern::new(&pairs).expect("rotation preserves validity")
}

/// Relabels every stub `i` as `2n + 1 - i`, reversing the cyclic order.
pub fn reflect_pattern(pattern: &LinkPattern) -> LinkPattern {
    let wrap = 2 * pattern.len();
    let pairs: Vec<(usize, usize)> = pattern
        .pairs()
        .iter()
        .map(|&(a, b)| (wrap + 1 - a, wrap + 1 - b))
        .collect();
    LinkPattern::new(&pairs).expect("reflection preserves validity")
}

/// Histogram of link patterns over every order-`n` state.
///
/// Exhaustive, so intended for `n <= 7`. Partitions of the enumeration
/// stream are tabulated in parallel and merged.
pub fn count_by_link_pattern(
    n: usize,
) -> Result<BTreeMap<LinkPattern, BigUint>, FplError> {
    assert!((1..=7).contains(&n), "exhaustive tabulation needs n in 1..=7");
    let partials: Vec<Result<BTreeMap<LinkPattern, BigUint>, FplError>> = (1..=n as u32)
        .into_par_iter()
        .map(|top| {
            let mut local: BTreeMap<LinkPattern, BigUint> = BTreeMap::new();
            for a in enumerate_asms_with_top(n, top) {
                let decomposition = link_pattern(&six_vertex_to_fpl(&asm_to_six_vertex(&a)))?;
                *local
                    .entry(decomposition.pattern)
                    .or_insert_with(BigUint::zero) += 1u32;
            }
            Ok(local)
        })
        .collect();
    let mut histogram: BTreeMap<LinkPattern, BigUint> = BTreeMap::new();
    for partial in partials {
        for (pattern, count) in partial? {
            *histogram.entry(pattern).or_insert_with(BigUint::zero) += count;
        }
    }
    Ok(histogram)
}

/// Whether the pattern histogram at order `n` is invariant under rotating
/// and under reflecting the stub labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WielandReport {
    pub n: usize,
    pub rotation_invariant: bool,
    pub reflection_invariant: bool,
}

impl WielandReport {
    pub fn invariant(&self) -> bool {
        self.rotation_invariant && self.reflection_invariant
    }
}

/// Checks histogram invariance under stub rotation and reflection. Both
/// hold for every order; a `false` anywhere signals a bug.
pub fn wieland_check(n: usize) -> Result<WielandReport, FplError> {
    let histogram = count_by_link_pattern(n)?;
    let relabeled = |f: fn(&LinkPattern) -> LinkPattern| -> BTreeMap<LinkPattern, BigUint> {
        histogram
            .iter()
            .map(|(pattern, count)| (f(pattern), count.clone()))
            .collect()
    };
    Ok(WielandReport {
        n,
        rotation_invariant: relabeled(rotate_pattern) == histogram,
        reflection_invariant: relabeled(reflect_pattern) == histogram,
    })
}

/// Comparison of the number of states linking stubs 1 and 2 against the
/// conjectured product `A(n) * (3/2) * (n^2 + 1) / (4n^2 - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilsonReport {
    pub n: usize,
    pub linked_count: BigUint,
    pub predicted: BigUint,
    pub equal: bool,
}

/// Counts the states whose pattern pairs stub 1 with stub 2 and compares
/// against the conjectured closed form, which must come out an integer.
pub fn wilson_fraction(n: usize) -> Result<WilsonReport, FplError> {
    let histogram = count_by_link_pattern(n)?;
    let linked_count: BigUint = histogram
        .iter()
        .filter(|(pattern, _)| pattern.contains_pair(1, 2))
        .map(|(_, count)| count.clone())
        .sum();
    let square = BigInt::from(n as u64 * n as u64);
    let predicted_exact = BigRational::from_integer(BigInt::from(count_formula(n)))
        * BigRational::new(
            BigInt::from(3) * (&square + BigInt::one()),
            BigInt::from(2) * (BigInt::from(4) * &square - BigInt::one()),
        );
    if !predicted_exact.is_integer() {
        return Err(FplError::NonIntegerPrediction {
            predicted: predicted_exact,
        });
    }
    let predicted = predicted_exact
        .to_integer()
        .to_biguint()
        .expect("product of positives");
    let equal = linked_count == predicted;
    Ok(WilsonReport {
        n,
        linked_count,
        predicted,
        equal,
    })
}
