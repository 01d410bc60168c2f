//! Six-vertex states with domain-wall boundary and their square-tile
//! classification.
//!
//! A state on the `n x n` vertex grid stores one bit per lattice edge:
//! `horizontal_right(r, s)` is true when the edge between vertices
//! `(r+1, s)` and `(r+1, s+1)` (paper-style coordinates on the
//! `(n+2) x (n+2)` grid) points toward larger column, and
//! `vertical_up(t, c)` is true when the edge between `(t, c+1)` and
//! `(t+1, c+1)` points toward smaller row. Domain-wall boundary means all
//! left and right boundary edges point inward and all top and bottom
//! boundary edges point outward.
//!
//! The bits are exactly the matrix prefix sums: a horizontal bit is set when
//! the row prefix sum to its left is 0, a vertical bit when the column
//! prefix sum above it is 0.

use super::{Asm, CoreError, Side};

/// One of the six local tile shapes of a vertex, named by where the flow
/// leaves the tile. The matrix entry is `+1` on [`TileKind::Gasket`], `-1`
/// on [`TileKind::TurnedGasket`], and `0` on the four basket tiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileKind {
    /// Entry `+1`: horizontal flow in, vertical flow out.
    Gasket,
    /// Entry `-1`: vertical flow in, horizontal flow out.
    TurnedGasket,
    /// Entry `0`, flow entering from west and south, leaving north and east.
    BasketNorthEast,
    /// Entry `0`, flow entering from east and north, leaving south and west.
    BasketSouthWest,
    /// Entry `0`, flow entering from east and south, leaving north and west.
    BasketNorthWest,
    /// Entry `0`, flow entering from west and north, leaving south and east.
    BasketSouthEast,
}

/// Display glyphs for the six tiles, indexed by [`TileKind::index`].
pub const TILE_GLYPHS: [char; 6] = ['+', '-', '>', '<', '^', 'v'];

impl TileKind {
    /// Canonical tile index, `0..6`, in the order of [`TILE_GLYPHS`].
    pub fn index(self) -> usize {
        match self {
            TileKind::Gasket => 0,
            TileKind::TurnedGasket => 1,
            TileKind::BasketNorthEast => 2,
            TileKind::BasketSouthWest => 3,
            TileKind::BasketNorthWest => 4,
            TileKind::BasketSouthEast => 5,
        }
    }

    /// Single-character glyph used by the text renderer.
    pub fn glyph(self) -> char {
        TILE_GLYPHS[self.index()]
    }

    /// Kebab-case tile name used in structured output.
    pub fn name(self) -> &'static str {
        match self {
            TileKind::Gasket => "gasket",
            TileKind::TurnedGasket => "turned-gasket",
            TileKind::BasketNorthEast => "basket-northeast",
            TileKind::BasketSouthWest => "basket-southwest",
            TileKind::BasketNorthWest => "basket-northwest",
            TileKind::BasketSouthEast => "basket-southeast",
        }
    }

    /// Inverse of [`TileKind::glyph`].
    pub fn from_glyph(c: char) -> Option<TileKind> {
        let all = [
            TileKind::Gasket,
            TileKind::TurnedGasket,
            TileKind::BasketNorthEast,
            TileKind::BasketSouthWest,
            TileKind::BasketNorthWest,
            TileKind::BasketSouthEast,
        ];
        all.into_iter().find(|t| t.glyph() == c)
    }
}

/// A six-vertex state with domain-wall boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SixVertexState {
    n: usize,
    /// `n * (n + 1)` bits, row-major over `(r, s)`.
    hor: Vec<bool>,
    /// `(n + 1) * n` bits, row-major over `(t, c)`.
    ver: Vec<bool>,
}

impl SixVertexState {
    /// Validates raw edge bits: shape, domain-wall boundary, and the
    /// two-in two-out rule at every vertex.
    pub fn new(
        n: usize,
        horizontal_right: &[Vec<bool>],
        vertical_up: &[Vec<bool>],
    ) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::NotSquare { rows: 0, cols: 0 });
        }
        if horizontal_right.len() != n || horizontal_right.iter().any(|r| r.len() != n + 1) {
            return Err(CoreError::InvariantViolated {
                kind: "horizontal bit grid must be n x (n+1)".into(),
            });
        }
        if vertical_up.len() != n + 1 || vertical_up.iter().any(|r| r.len() != n) {
            return Err(CoreError::InvariantViolated {
                kind: "vertical bit grid must be (n+1) x n".into(),
            });
        }
        let hor: Vec<bool> = horizontal_right.iter().flatten().copied().collect();
        let ver: Vec<bool> = vertical_up.iter().flatten().copied().collect();
        let state = SixVertexState { n, hor, ver };
        for r in 0..n {
            if !state.horizontal_right(r, 0) {
                return Err(CoreError::BoundaryViolated { side: Side::Left, index: r });
            }
            if state.horizontal_right(r, n) {
                return Err(CoreError::BoundaryViolated { side: Side::Right, index: r });
            }
        }
        for c in 0..n {
            if !state.vertical_up(0, c) {
                return Err(CoreError::BoundaryViolated { side: Side::Top, index: c });
            }
            if state.vertical_up(n, c) {
                return Err(CoreError::BoundaryViolated { side: Side::Bottom, index: c });
            }
        }
        for r in 0..n {
            for c in 0..n {
                let via_row = i8::from(state.horizontal_right(r, c))
                    - i8::from(state.horizontal_right(r, c + 1));
                let via_col =
                    i8::from(state.vertical_up(r, c)) - i8::from(state.vertical_up(r + 1, c));
                if via_row != via_col {
                    return Err(CoreError::IceRuleViolated { row: r, col: c });
                }
            }
        }
        Ok(state)
    }

    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Whether the horizontal edge in internal row `r` at slot `s` points
    /// toward larger column (`r < n`, `s <= n`).
    pub fn horizontal_right(&self, r: usize, s: usize) -> bool {
        self.hor[r * (self.n + 1) + s]
    }

    /// Whether the vertical edge in internal column `c` at slot `t` points
    /// toward smaller row (`t <= n`, `c < n`).
    pub fn vertical_up(&self, t: usize, c: usize) -> bool {
        self.ver[t * self.n + c]
    }

    /// Horizontal bits as rows of `0`/`1`.
    pub fn horizontal_rows(&self) -> Vec<Vec<u8>> {
        self.hor
            .chunks(self.n + 1)
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }

    /// Vertical bits as rows of `0`/`1`.
    pub fn vertical_rows(&self) -> Vec<Vec<u8>> {
        self.ver
            .chunks(self.n)
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect()
    }
}

/// Encodes a matrix as the six-vertex state whose edge bits are its row and
/// column prefix sums.
pub fn asm_to_six_vertex(a: &Asm) -> SixVertexState {
    let n = a.order();
    let mut hor = Vec::with_capacity(n * (n + 1));
    for r in 0..n {
        let mut prefix = 0i32;
        hor.push(true);
        for c in 0..n {
            prefix += i32::from(a.entry(r, c));
            hor.push(prefix == 0);
        }
    }
    let mut ver = vec![false; (n + 1) * n];
    for c in 0..n {
        let mut prefix = 0i32;
        ver[c] = true;
        for t in 0..n {
            prefix += i32::from(a.entry(t, c));
            ver[(t + 1) * n + c] = prefix == 0;
        }
    }
    SixVertexState { n, hor, ver }
}

/// Recovers the matrix from a six-vertex state by differencing the
/// horizontal bits along each row.
pub fn six_vertex_to_asm(s: &SixVertexState) -> Asm {
    let n = s.order();
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            entries
                .push(i8::from(s.horizontal_right(r, c)) - i8::from(s.horizontal_right(r, c + 1)));
        }
    }
    Asm::from_entries_unchecked(n, entries)
}

/// Classifies every vertex of a state into its square tile, row-major.
pub fn tile_type_map(s: &SixVertexState) -> Vec<TileKind> {
    let n = s.order();
    let mut tiles = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let entry =
                i8::from(s.horizontal_right(r, c)) - i8::from(s.horizontal_right(r, c + 1));
            let tile = match entry {
                1 => TileKind::Gasket,
                -1 => TileKind::TurnedGasket,
                _ => {
                    let in_row = !s.horizontal_right(r, c);
                    let in_col = !s.vertical_up(r, c);
                    match (in_row, in_col) {
                        (false, false) => TileKind::BasketNorthEast,
                        (true, true) => TileKind::BasketSouthWest,
                        (true, false) => TileKind::BasketNorthWest,
                        (false, true) => TileKind::BasketSouthEast,
                    }
                }
            };
            tiles.push(tile);
        }
    }
    tiles
}

/// Renders a tile map as one glyph row per matrix row.
pub fn tile_glyph_grid(tiles: &[TileKind], n: usize) -> String {
    let mut out = String::with_capacity((n + 1) * n);
    for r in 0..n {
        for c in 0..n {
            out.push(tiles[r * n + c].glyph());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::test_atlas;
    use super::super::{validate_asm, CoreError, Side};
    use super::*;

    fn bits(rows: &[&[u8]]) -> Vec<Vec<bool>> {
        rows.iter()
            .map(|r| r.iter().map(|&b| b != 0).collect())
            .collect()
    }

    #[test]
    fn antidiagonal_order3_bits() {
        let a = test_atlas::asm(0);
        let s = asm_to_six_vertex(&a);
        assert_eq!(
            s.horizontal_rows(),
            vec![vec![1, 1, 1, 0], vec![1, 1, 0, 0], vec![1, 0, 0, 0]]
        );
        assert_eq!(
            s.vertical_rows(),
            vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]
        );
    }

    #[test]
    fn round_trips_atlas() {
        for idx in 0..7 {
            let a = test_atlas::asm(idx);
            let s = asm_to_six_vertex(&a);
            assert_eq!(six_vertex_to_asm(&s), a);
            let rebuilt = SixVertexState::new(
                3,
                &bits(&s.horizontal_rows().iter().map(Vec::as_slice).collect::<Vec<_>>()),
                &bits(&s.vertical_rows().iter().map(Vec::as_slice).collect::<Vec<_>>()),
            )
            .unwrap();
            assert_eq!(rebuilt, s);
        }
        let rows: Vec<Vec<i64>> = test_atlas::ORDER4_ASM.iter().map(|r| r.to_vec()).collect();
        let a = validate_asm(&rows).unwrap();
        assert_eq!(six_vertex_to_asm(&asm_to_six_vertex(&a)), a);
    }

    #[test]
    fn rejects_boundary_and_ice_violations() {
        let a = test_atlas::asm(0);
        let s = asm_to_six_vertex(&a);
        let hor = bits(&s.horizontal_rows().iter().map(Vec::as_slice).collect::<Vec<_>>());
        let ver = bits(&s.vertical_rows().iter().map(Vec::as_slice).collect::<Vec<_>>());

        let mut bad = hor.clone();
        bad[1][0] = false;
        assert_eq!(
            SixVertexState::new(3, &bad, &ver).unwrap_err(),
            CoreError::BoundaryViolated { side: Side::Left, index: 1 }
        );

        let mut bad = ver.clone();
        bad[3][2] = true;
        assert_eq!(
            SixVertexState::new(3, &hor, &bad).unwrap_err(),
            CoreError::BoundaryViolated { side: Side::Bottom, index: 2 }
        );

        let mut bad = ver.clone();
        bad[1][0] = false;
        assert_eq!(
            SixVertexState::new(3, &hor, &bad).unwrap_err(),
            CoreError::IceRuleViolated { row: 0, col: 0 }
        );
    }

    #[test]
    fn tile_map_of_central_order3_state() {
        let a = test_atlas::asm(3);
        let s = asm_to_six_vertex(&a);
        let tiles = tile_type_map(&s);
        assert_eq!(tile_glyph_grid(&tiles, 3), ">+^\n+-+\nv+<\n");
    }

    #[test]
    fn gasket_count_tracks_negative_entries() {
        for idx in 0..7 {
            let a = test_atlas::asm(idx);
            let minus = (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .filter(|&(i, j)| a.entry(i, j) == -1)
                .count();
            let tiles = tile_type_map(&asm_to_six_vertex(&a));
            let gaskets = tiles
                .iter()
                .filter(|t| matches!(t, TileKind::Gasket | TileKind::TurnedGasket))
                .count();
            assert_eq!(gaskets, 3 + 2 * minus);
        }
    }

    #[test]
    fn glyphs_round_trip() {
        for (i, &g) in TILE_GLYPHS.iter().enumerate() {
            let t = TileKind::from_glyph(g).unwrap();
            assert_eq!(t.index(), i);
            assert_eq!(t.glyph(), g);
        }
        assert_eq!(TileKind::from_glyph('x'), None);
    }
}
