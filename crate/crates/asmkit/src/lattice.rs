//! The distributive lattice structure on height functions.
//!
//! Height functions of one order form a lattice under entrywise max and
//! min. The companion poset has one element per unit of drop available at
//! each interior site: site `(i, j)` can sit at heights `hmax(i, j)`,
//! `hmax(i, j) - 2`, ..., down to `hmin(i, j)`, and the element
//! `(i, j, layer)` records the drop from `hmax - 2 * layer` to
//! `hmax - 2 * (layer + 1)`. A height function corresponds to the order
//! ideal holding the drops it has taken, so counting ideals recounts the
//! matrices by a third, order-theoretic route.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::core::HeightFunction;

/// Failure of a lattice operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Two arguments have different orders.
    OrderMismatch { left: usize, right: usize },
    /// An element index is outside the poset.
    BadElement { index: usize, len: usize },
    /// A member's covered element is missing from the ideal.
    NotDownwardClosed { element: (usize, usize, usize) },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            LatticeError::BadElement { index, len } => {
                write!(f, "element index {index} out of range for poset of {len}")
            }
            LatticeError::NotDownwardClosed { element } => {
                let (i, j, layer) = element;
                write!(
                    f,
                    "ideal is not downward closed below ({i}, {j}, layer {layer})"
                )
            }
        }
    }
}

impl std::error::Error for LatticeError {}

/// Largest possible height at `(i, j)`, attained by the lattice top.
fn height_ceiling(n: usize, i: usize, j: usize) -> usize {
    (i + j).min(2 * n - i - j)
}

/// Smallest possible height at `(i, j)`, attained by the lattice bottom.
fn height_floor(i: usize, j: usize) -> usize {
    i.abs_diff(j)
}

/// Number of drops available at `(i, j)`.
fn fiber_size(n: usize, i: usize, j: usize) -> usize {
    (height_ceiling(n, i, j) - height_floor(i, j)) / 2
}

/// Entrywise maximum of two height functions of the same order.
pub fn join(a: &HeightFunction, b: &HeightFunction) -> Result<HeightFunction, LatticeError> {
    combine(a, b, i64::max)
}

/// Entrywise minimum of two height functions of the same order.
pub fn meet(a: &HeightFunction, b: &HeightFunction) -> Result<HeightFunction, LatticeError> {
    combine(a, b, i64::min)
}

fn combine(
    a: &HeightFunction,
    b: &HeightFunction,
    pick: fn(i64, i64) -> i64,
) -> Result<HeightFunction, LatticeError> {
    if a.order() != b.order() {
        return Err(LatticeError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let rows: Vec<Vec<i64>> = a
        .to_rows()
        .into_iter()
        .zip(b.to_rows())
        .map(|(ra, rb)| ra.into_iter().zip(rb).map(|(x, y)| pick(x, y)).collect())
        .collect();
    // The entrywise max or min of two height functions with a common
    // boundary steps by one wherever both arguments do, so it validates.
    Ok(HeightFunction::new(&rows).expect("combination stays a height function"))
}

/// The poset whose order ideals are the order-`n` height functions.
pub struct TetraPoset {
    n: usize,
    elements: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
    covers: Vec<Vec<usize>>,
    ranks: Vec<usize>,
}

/// Builds the poset of drops for order `n`.
///
/// Element `(i, j, layer)` covers, at each of the four neighbouring
/// interior sites, the drop forced by the height constraint there: the same
/// layer where the ceiling rises by one, the layer below where it falls.
/// Same-site drops are ordered through those neighbours, so they are not
/// covers themselves.
pub fn build_poset(n: usize) -> TetraPoset {
    assert!(n >= 1, "order must be at least 1");
    let mut elements = Vec::new();
    for i in 1..n {
        for j in 1..n {
            for layer in 0..fiber_size(n, i, j) {
                elements.push((i, j, layer));
            }
        }
    }
    let index: HashMap<(usize, usize, usize), usize> = elements
        .iter()
        .copied()
        .enumerate()
        .map(|(k, e)| (e, k))
        .collect();
    let mut covers = Vec::with_capacity(elements.len());
    let mut ranks = Vec::with_capacity(elements.len());
    for &(i, j, layer) in &elements {
        let mut below = Vec::new();
        for (ni, nj) in [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)] {
            if !(1..n).contains(&ni) || !(1..n).contains(&nj) {
                continue;
            }
            let rises = height_ceiling(n, ni, nj) == height_ceiling(n, i, j) + 1;
            let candidate = if rises {
                (ni, nj, layer)
            } else if layer > 0 {
                (ni, nj, layer - 1)
            } else {
                continue;
            };
            match index.get(&candidate) {
                Some(&k) => below.push(k),
                None => debug_assert!(false, "missing cover {candidate:?}"),
            }
        }
        below.sort_unstable();
        covers.push(below);
        ranks.push(2 * layer + n - height_ceiling(n, i, j));
    }
    TetraPoset {
        n,
        elements,
        index,
        covers,
        ranks,
    }
}

impl TetraPoset {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements as `(i, j, layer)` triples, indexed by position.
    pub fn elements(&self) -> &[(usize, usize, usize)] {
        &self.elements
    }

    pub fn element_index(&self, i: usize, j: usize, layer: usize) -> Option<usize> {
        self.index.get(&(i, j, layer)).copied()
    }

    /// Indices of the elements that element `k` covers.
    pub fn covers(&self, k: usize) -> &[usize] {
        &self.covers[k]
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks[k]
    }

    /// Element counts per rank, from rank 0 upward.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.n.saturating_sub(1)];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }
}

/// A downward-closed set of poset elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdeal {
    n: usize,
    members: Vec<bool>,
}

impl OrderIdeal {
    /// Validates that `members` (element indices into `poset`) form an
    /// ideal: every member's covered elements are members too.
    pub fn new(poset: &TetraPoset, members: &[usize]) -> Result<OrderIdeal, LatticeError> {
        let mut flags = vec![false; poset.len()];
        for &k in members {
            if k >= poset.len() {
                return Err(LatticeError::BadElement {
                    index: k,
                    len: poset.len(),
                });
            }
            flags[k] = true;
        }
        for k in 0..flags.len() {
            if flags[k] {
                for &below in poset.covers(k) {
                    if !flags[below] {
                        return Err(LatticeError::NotDownwardClosed {
                            element: poset.elements()[k],
                        });
                    }
                }
            }
        }
        Ok(OrderIdeal { n: poset.order(), members: flags })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|m| **m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|m| *m)
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.get(k).copied().unwrap_or(false)
    }

    /// Member indices in ascending order.
    pub fn member_indices(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&k| self.members[k]).collect()
    }
}

/// Ideal of the drops `h` has taken: `(i, j, layer)` is a member exactly
/// when `h(i, j)` lies more than `2 * layer` below the ceiling.
pub fn height_to_ideal(
    poset: &TetraPoset,
    h: &HeightFunction,
) -> Result<OrderIdeal, LatticeError> {
    if poset.order() != h.order() {
        return Err(LatticeError::OrderMismatch {
            left: poset.order(),
            right: h.order(),
        });
    }
    let n = poset.order();
    let members = poset
        .elements()
        .iter()
        .map(|&(i, j, layer)| {
            let drop = height_ceiling(n, i, j) as i64 - i64::from(h.value(i, j));
            (layer as i64) < drop / 2
        })
        .collect();
    Ok(OrderIdeal { n, members })
}

/// Rebuilds the height function whose drops are exactly `ideal`.
pub fn ideal_to_height(
    poset: &TetraPoset,
    ideal: &OrderIdeal,
) -> Result<HeightFunction, LatticeError> {
    if poset.order() != ideal.order() {
        return Err(LatticeError::OrderMismatch {
            left: poset.order(),
            right: ideal.order(),
        });
    }
    let n = poset.order();
    let mut drops: HashMap<(usize, usize), usize> = HashMap::new();
    for (k, &(i, j, _)) in poset.elements().iter().enumerate() {
        if ideal.contains(k) {
            *drops.entry((i, j)).or_insert(0) += 1;
        }
    }
    let rows: Vec<Vec<i64>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i == 0 || j == 0 || i == n || j == n {
                        height_ceiling(n, i, j) as i64
                    } else {
                        let taken = drops.get(&(i, j)).copied().unwrap_or(0);
                        (height_ceiling(n, i, j) - 2 * taken) as i64
                    }
                })
                .collect()
        })
        .collect();
    Ok(HeightFunction::new(&rows).expect("downward-closed ideal lifts"))
}

/// Counts the order ideals, and hence the order-`n` matrices, by a dynamic
/// program over whole height-function rows: row `r` is a `+-1` step profile
/// from `r` on the left edge to `n - r` on the right, and consecutive rows
/// must differ by exactly one in every column.
pub fn count_ideals(n: usize) -> BigUint {
    assert!(n >= 1, "order must be at least 1");
    let full = (1u64 << n) - 1;
    let mut cur: HashMap<u64, BigUint> = HashMap::new();
    cur.insert(full, BigUint::one());
    let mut prev_row = vec![0i64; n + 1];
    for r in 1..=n {
        let mut next: HashMap<u64, BigUint> = HashMap::new();
        for (mask, count) in &cur {
            decode_row(*mask, r as i64 - 1, &mut prev_row);
            compatible_rows(&prev_row, r as i64, n, &mut |m| {
                *next.entry(m).or_insert_with(BigUint::zero) += count;
            });
        }
        cur = next;
    }
    cur.remove(&0).unwrap_or_else(BigUint::zero)
}

fn decode_row(mask: u64, start: i64, out: &mut [i64]) {
    out[0] = start;
    for j in 0..out.len() - 1 {
        out[j + 1] = out[j] + if mask >> j & 1 == 1 { 1 } else { -1 };
    }
}

/// Feeds `sink` the step mask of every row adjacent to `prev` that runs
/// from `r` to `n - r`.
fn compatible_rows(prev: &[i64], r: i64, n: usize, sink: &mut impl FnMut(u64)) {
    fn extend(
        prev: &[i64],
        j: usize,
        h: i64,
        mask: u64,
        end: i64,
        n: usize,
        sink: &mut impl FnMut(u64),
    ) {
        if j == n + 1 {
            if h == end {
                sink(mask);
            }
            return;
        }
        for (step, bit) in [(1i64, 1u64), (-1, 0)] {
            let v = h + step;
            if (v - prev[j]).abs() == 1 && (end - v).abs() <= (n - j) as i64 {
                extend(prev, j + 1, v, mask | bit << (j - 1), end, n, sink);
            }
        }
    }
    extend(prev, 1, r, 0, n as i64 - r, n, sink);
}
