//! Fully packed loop states on the square grid with alternating boundary
//! stubs, and the non-crossing link patterns they induce.
//!
//! The loop graph of order `n` lives on the `(n+2) x (n+2)` vertex grid.
//! Its edges are the horizontal edges `(i, s)-(i, s+1)` for internal rows
//! `1 <= i <= n` and the vertical edges `(t, j)-(t+1, j)` for internal
//! columns `1 <= j <= n`. The `4n` edges touching the boundary ring are
//! stubs; a valid state keeps every second stub in cyclic order (`2n` of
//! them) and gives every internal vertex degree exactly 2.

use super::CoreError;

/// A fully packed loop state: the kept-edge subgraph.
///
/// Bit layout matches [`super::SixVertexState`]: `horizontal(r, s)` is the
/// edge `(r+1, s)-(r+1, s+1)` and `vertical(t, c)` is the edge
/// `(t, c+1)-(t+1, c+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FplState {
    n: usize,
    hor: Vec<bool>,
    ver: Vec<bool>,
}

/// A boundary stub of the loop graph: its 1-based clockwise index, the
/// boundary vertex it hangs from, and the internal vertex it attaches to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stub {
    pub index: usize,
    pub outer: (usize, usize),
    pub inner: (usize, usize),
}

/// The `2n` selected stubs of the order-`n` loop graph in clockwise order:
/// down the top side left to right, the right side top to bottom, the bottom
/// side right to left, and the left side bottom to top.
pub fn boundary_stubs(n: usize) -> Vec<Stub> {
    let mut stubs = Vec::with_capacity(2 * n);
    let mut index = 0;
    let mut push = |outer: (usize, usize), inner: (usize, usize)| {
        index += 1;
        stubs.push(Stub { index, outer, inner });
    };
    for j in (1..=n).filter(|j| j % 2 == 1) {
        push((0, j), (1, j));
    }
    for i in (1..=n).filter(|i| (i + n + 1) % 2 == 0) {
        push((i, n + 1), (i, n));
    }
    for j in (1..=n).rev().filter(|j| (n + j) % 2 == 0) {
        push((n + 1, j), (n, j));
    }
    for i in (1..=n).rev().filter(|i| i % 2 == 0) {
        push((i, 0), (i, 1));
    }
    debug_assert_eq!(stubs.len(), 2 * n);
    stubs
}

impl FplState {
    /// Validates kept-edge bit grids: internal vertices must have degree 2
    /// and the kept stubs must be exactly the alternating boundary set.
    pub fn new(
        n: usize,
        horizontal: &[Vec<bool>],
        vertical: &[Vec<bool>],
    ) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::NotSquare { rows: 0, cols: 0 });
        }
        if horizontal.len() != n || horizontal.iter().any(|r| r.len() != n + 1) {
            return Err(CoreError::InvariantViolated {
                kind: "horizontal keep grid must be n x (n+1)".into(),
            });
        }
        if vertical.len() != n + 1 || vertical.iter().any(|r| r.len() != n) {
            return Err(CoreError::InvariantViolated {
                kind: "vertical keep grid must be (n+1) x n".into(),
            });
        }
        let state = FplState {
            n,
            hor: horizontal.iter().flatten().copied().collect(),
            ver: vertical.iter().flatten().copied().collect(),
        };
        for c in 0..n {
            let top_expected = (c + 1) % 2 == 1;
            if state.vertical(0, c) != top_expected {
                return Err(CoreError::InvariantViolated {
                    kind: format!("top stub at column {} must alternate", c + 1),
                });
            }
            let bottom_expected = (n + c + 1) % 2 == 0;
            if state.vertical(n, c) != bottom_expected {
                return Err(CoreError::InvariantViolated {
                    kind: format!("bottom stub at column {} must alternate", c + 1),
                });
            }
        }
        for r in 0..n {
            let left_expected = (r + 1) % 2 == 0;
            if state.horizontal(r, 0) != left_expected {
                return Err(CoreError::InvariantViolated {
                    kind: format!("left stub at row {} must alternate", r + 1),
                });
            }
            let right_expected = (r + 1 + n + 1) % 2 == 0;
            if state.horizontal(r, n) != right_expected {
                return Err(CoreError::InvariantViolated {
                    kind: format!("right stub at row {} must alternate", r + 1),
                });
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if state.degree((i, j)) != 2 {
                    return Err(CoreError::InvariantViolated {
                        kind: format!("vertex ({i}, {j}) must have degree 2"),
                    });
                }
            }
        }
        Ok(state)
    }

    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Whether the horizontal edge `(r+1, s)-(r+1, s+1)` is kept.
    pub fn horizontal(&self, r: usize, s: usize) -> bool {
        self.hor[r * (self.n + 1) + s]
    }

    /// Whether the vertical edge `(t, c+1)-(t+1, c+1)` is kept.
    pub fn vertical(&self, t: usize, c: usize) -> bool {
        self.ver[t * self.n + c]
    }

    /// Whether the grid edge between two adjacent vertices is kept.
    /// Vertices use the `(n+2) x (n+2)` paper grid.
    pub fn has_edge(&self, u: (usize, usize), v: (usize, usize)) -> bool {
        let n = self.n;
        let ((i1, j1), (i2, j2)) = if u <= v { (u, v) } else { (v, u) };
        if i1 == i2 && j2 == j1 + 1 {
            (1..=n).contains(&i1) && self.horizontal(i1 - 1, j1)
        } else if j1 == j2 && i2 == i1 + 1 {
            (1..=n).contains(&j1) && self.vertical(i1, j1 - 1)
        } else {
            false
        }
    }

    /// Kept neighbors of a vertex on the `(n+2) x (n+2)` grid.
    pub fn neighbors(&self, v: (usize, usize)) -> Vec<(usize, usize)> {
        let n = self.n;
        let (i, j) = v;
        let mut out = Vec::with_capacity(4);
        if i >= 1 && self.has_edge(v, (i - 1, j)) {
            out.push((i - 1, j));
        }
        if j >= 1 && self.has_edge(v, (i, j - 1)) {
            out.push((i, j - 1));
        }
        if j + 1 <= n + 1 && self.has_edge(v, (i, j + 1)) {
            out.push((i, j + 1));
        }
        if i + 1 <= n + 1 && self.has_edge(v, (i + 1, j)) {
            out.push((i + 1, j));
        }
        out
    }

    fn degree(&self, v: (usize, usize)) -> usize {
        self.neighbors(v).len()
    }

    /// All kept edges as canonically ordered vertex pairs, sorted.
    pub fn edges(&self) -> Vec<((usize, usize), (usize, usize))> {
        let n = self.n;
        let mut out = Vec::new();
        for r in 0..n {
            for s in 0..=n {
                if self.horizontal(r, s) {
                    out.push(((r + 1, s), (r + 1, s + 1)));
                }
            }
        }
        for t in 0..=n {
            for c in 0..n {
                if self.vertical(t, c) {
                    out.push(((t, c + 1), (t + 1, c + 1)));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// A non-crossing perfect matching of the stubs `1..=2n`, each pair joining
/// an odd and an even stub. Pairs are stored as `(min, max)`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern {
    pairs: Vec<(usize, usize)>,
}

/// Returns some pair of chords that cross, if any. Chords cross when their
/// endpoints interleave around the circle `1..=2n`.
pub fn crossing(pairs: &[(usize, usize)]) -> Option<((usize, usize), (usize, usize))> {
    let norm: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    for (k, &(a, b)) in norm.iter().enumerate() {
        for &(c, d) in &norm[k + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

impl LinkPattern {
    /// Validates a stub matching: a perfect matching of `1..=2n` whose pairs
    /// each join an odd and an even stub without crossing.
    pub fn new(pairs: &[(usize, usize)]) -> Result<Self, CoreError> {
        let n = pairs.len();
        if n == 0 {
            return Err(CoreError::InvariantViolated {
                kind: "link pattern must have at least one pair".into(),
            });
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(a, b) in pairs {
            for e in [a, b] {
                if e < 1 || e > 2 * n {
                    return Err(CoreError::InvariantViolated {
                        kind: format!("stub {e} out of range 1..={}", 2 * n),
                    });
                }
                if seen[e] {
                    return Err(CoreError::InvariantViolated {
                        kind: format!("stub {e} matched twice"),
                    });
                }
                seen[e] = true;
            }
            if (a + b) % 2 == 0 {
                return Err(CoreError::InvariantViolated {
                    kind: format!("pair ({a}, {b}) must join an odd and an even stub"),
                });
            }
        }
        if let Some((p, q)) = crossing(pairs) {
            return Err(CoreError::InvariantViolated {
                kind: format!("pairs {p:?} and {q:?} cross"),
            });
        }
        let mut pairs: Vec<(usize, usize)> =
            pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        Ok(LinkPattern { pairs })
    }

    /// Number of pairs (`n` for an order-`n` state).
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Whether the pattern has no pairs; never true for validated patterns.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The pairs, each `(min, max)`, sorted ascending.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Whether stubs `a` and `b` are matched to each other.
    pub fn contains_pair(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a.min(b), a.max(b)))
    }
}

impl std::fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, (a, b)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stub_positions_order3() {
        let stubs = boundary_stubs(3);
        let got: Vec<(usize, (usize, usize))> =
            stubs.iter().map(|s| (s.index, s.outer)).collect();
        assert_eq!(
            got,
            vec![
                (1, (0, 1)),
                (2, (0, 3)),
                (3, (2, 4)),
                (4, (4, 3)),
                (5, (4, 1)),
                (6, (2, 0)),
            ]
        );
    }

    #[test]
    fn stub_positions_order6() {
        let stubs = boundary_stubs(6);
        let got: Vec<(usize, (usize, usize))> =
            stubs.iter().map(|s| (s.index, s.outer)).collect();
        assert_eq!(
            got,
            vec![
                (1, (0, 1)),
                (2, (0, 3)),
                (3, (0, 5)),
                (4, (1, 7)),
                (5, (3, 7)),
                (6, (5, 7)),
                (7, (7, 6)),
                (8, (7, 4)),
                (9, (7, 2)),
                (10, (6, 0)),
                (11, (4, 0)),
                (12, (2, 0)),
            ]
        );
    }

    #[test]
    fn stub_count_is_2n() {
        for n in 1..=12 {
            assert_eq!(boundary_stubs(n).len(), 2 * n);
        }
    }

    #[test]
    fn link_pattern_validation() {
        LinkPattern::new(&[(1, 2), (3, 4), (5, 6)]).unwrap();
        LinkPattern::new(&[(2, 1), (6, 3), (4, 5)]).unwrap();
        assert!(LinkPattern::new(&[(1, 3), (2, 4)]).is_err());
        assert!(LinkPattern::new(&[(1, 2), (1, 4)]).is_err());
        assert!(LinkPattern::new(&[(1, 2), (3, 9)]).is_err());
        assert!(LinkPattern::new(&[(1, 4), (2, 3), (5, 6)]).is_ok());
        assert!(LinkPattern::new(&[(1, 4), (3, 6), (2, 5)]).is_err());
        assert!(LinkPattern::new(&[]).is_err());
    }

    #[test]
    fn crossing_detects_interleaving() {
        assert!(crossing(&[(1, 4), (2, 3)]).is_none());
        assert_eq!(crossing(&[(1, 3), (2, 4)]), Some(((1, 3), (2, 4))));
        assert!(crossing(&[(1, 2), (3, 6), (4, 5)]).is_none());
    }

    #[test]
    fn pattern_display_and_queries() {
        let p = LinkPattern::new(&[(6, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(p.to_string(), "1-6,2-3,4-5");
        assert_eq!(p.len(), 3);
        assert!(p.contains_pair(3, 2));
        assert!(!p.contains_pair(1, 2));
    }
}
