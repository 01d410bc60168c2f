//! Representation types for alternating-sign matrices and the exact
//! bijections between them.
//!
//! Every type validates its full invariant set on construction, so a value
//! of any of these types is always well-formed. Conversion functions between
//! validated types are total and never fail, except for the coloring-to-height
//! lift, which reports the first cell where no consistent lift exists.
//!
//! All indices in this module are 0-based. Matrix entries are addressed as
//! `(row, column)`; corner grids attached to an order-`n` matrix have
//! `(n + 1) x (n + 1)` entries addressed the same way.

mod ice;
mod io;
mod loops;

pub use ice::{
    asm_to_six_vertex, six_vertex_to_asm, tile_glyph_grid, tile_type_map, SixVertexState,
    TileKind, TILE_GLYPHS,
};
pub use io::{
    object_from_json, object_from_text, object_to_json, object_to_text, parse_matrix_text, Kind,
    Object,
};
pub use loops::{boundary_stubs, crossing, FplState, LinkPattern, Stub};

use std::fmt;

/// Matrix direction used in alternation error reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Column => write!(f, "column"),
        }
    }
}

/// Boundary side of a six-vertex state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Top => write!(f, "top"),
            Side::Bottom => write!(f, "bottom"),
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Validation or conversion failure for a representation type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// The input is not a square matrix of positive order.
    NotSquare { rows: usize, cols: usize },
    /// An entry lies outside the allowed value set.
    BadEntryValue { row: usize, col: usize, value: i64 },
    /// A row or column violates the sum-to-one alternation rule.
    AlternationViolated { axis: Axis, index: usize },
    /// A height value has the wrong parity for its position.
    ParityViolated { row: usize, col: usize },
    /// A three-coloring admits no consistent height lift at this cell.
    NoLift { row: usize, col: usize },
    /// A vertex of a six-vertex state is not two-in two-out.
    IceRuleViolated { row: usize, col: usize },
    /// A six-vertex boundary edge does not match the domain-wall pattern.
    BoundaryViolated { side: Side, index: usize },
    /// A structural invariant of the named kind failed.
    InvariantViolated { kind: String },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix of positive order, got {rows}x{cols}")
            }
            CoreError::BadEntryValue { row, col, value } => {
                write!(f, "entry ({row}, {col}) has disallowed value {value}")
            }
            CoreError::AlternationViolated { axis, index } => {
                write!(f, "{axis} {index} violates the alternating sum rule")
            }
            CoreError::ParityViolated { row, col } => {
                write!(f, "height at ({row}, {col}) has the wrong parity")
            }
            CoreError::NoLift { row, col } => {
                write!(f, "coloring admits no height lift at ({row}, {col})")
            }
            CoreError::IceRuleViolated { row, col } => {
                write!(f, "vertex ({row}, {col}) is not two-in two-out")
            }
            CoreError::BoundaryViolated { side, index } => {
                write!(f, "{side} boundary edge {index} breaks the domain-wall pattern")
            }
            CoreError::InvariantViolated { kind } => write!(f, "invariant violated: {kind}"),
        }
    }
}

impl std::error::Error for CoreError {}

fn invariant(kind: impl Into<String>) -> CoreError {
    CoreError::InvariantViolated { kind: kind.into() }
}

/// An alternating-sign matrix: a square matrix over `{-1, 0, +1}` whose rows
/// and columns each sum to 1 with nonzero entries alternating in sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Validates `rows` as an alternating-sign matrix.
    ///
    /// The prefix sums of every row and column must stay in `{0, 1}` and end
    /// at 1; this is equivalent to the alternation rule.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, CoreError> {
        validate_asm(rows)
    }

    /// Order of the matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Rows as vectors of `i64`, convenient for serialization.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    /// Builds a matrix by evaluating `f` at every position, then validates it.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i8) -> Result<Self, CoreError> {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(f(i, j))).collect())
            .collect();
        validate_asm(&rows)
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }
}

/// Validates a row list as an alternating-sign matrix.
pub fn validate_asm(rows: &[Vec<i64>]) -> Result<Asm, CoreError> {
    let n = rows.len();
    if n == 0 {
        return Err(CoreError::NotSquare { rows: 0, cols: 0 });
    }
    for row in rows {
        if row.len() != n {
            return Err(CoreError::NotSquare { rows: n, cols: row.len() });
        }
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(CoreError::BadEntryValue { row: i, col: j, value: v });
            }
            entries.push(v as i8);
        }
    }
    for i in 0..n {
        let mut sum = 0i64;
        for j in 0..n {
            sum += i64::from(entries[i * n + j]);
            if sum != 0 && sum != 1 {
                return Err(CoreError::AlternationViolated { axis: Axis::Row, index: i });
            }
        }
        if sum != 1 {
            return Err(CoreError::AlternationViolated { axis: Axis::Row, index: i });
        }
    }
    for j in 0..n {
        let mut sum = 0i64;
        for i in 0..n {
            sum += i64::from(entries[i * n + j]);
            if sum != 0 && sum != 1 {
                return Err(CoreError::AlternationViolated { axis: Axis::Column, index: j });
            }
        }
        if sum != 1 {
            return Err(CoreError::AlternationViolated { axis: Axis::Column, index: j });
        }
    }
    Ok(Asm { n, entries })
}

/// The corner-sum matrix of an order-`n` matrix: the `(n+1) x (n+1)` grid of
/// sums of the upper-left submatrices.
///
/// Row 0 and column 0 are zero, the last row and column run `0..=n`, and the
/// grid increases by 0 or 1 along every row and column step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CornerSum {
    n: usize,
    values: Vec<i32>,
}

impl CornerSum {
    /// Validates a corner-sum grid.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, CoreError> {
        let m = rows.len();
        if m < 2 {
            return Err(CoreError::NotSquare { rows: m, cols: rows.first().map_or(0, Vec::len) });
        }
        let n = m - 1;
        for row in rows {
            if row.len() != m {
                return Err(CoreError::NotSquare { rows: m, cols: row.len() });
            }
        }
        for j in 0..=n {
            if rows[0][j] != 0 {
                return Err(invariant("corner-sum first row must be zero"));
            }
            if rows[n][j] != j as i64 {
                return Err(invariant("corner-sum last row must run 0..=n"));
            }
        }
        for i in 0..=n {
            if rows[i][0] != 0 {
                return Err(invariant("corner-sum first column must be zero"));
            }
            if rows[i][n] != i as i64 {
                return Err(invariant("corner-sum last column must run 0..=n"));
            }
        }
        for i in 0..=n {
            for j in 0..=n {
                if i > 0 {
                    let step = rows[i][j] - rows[i - 1][j];
                    if step != 0 && step != 1 {
                        return Err(invariant("corner-sum column steps must be 0 or 1"));
                    }
                }
                if j > 0 {
                    let step = rows[i][j] - rows[i][j - 1];
                    if step != 0 && step != 1 {
                        return Err(invariant("corner-sum row steps must be 0 or 1"));
                    }
                }
            }
        }
        let values = rows.iter().flatten().map(|&v| v as i32).collect();
        Ok(CornerSum { n, values })
    }

    /// Order of the underlying matrix (the grid is one larger each way).
    pub fn order(&self) -> usize {
        self.n
    }

    /// Grid value at 0-based `(i, j)` with `i, j <= n`.
    pub fn value(&self, i: usize, j: usize) -> i32 {
        self.values[i * (self.n + 1) + j]
    }

    /// Grid rows as vectors of `i64`.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.values
            .chunks(self.n + 1)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }
}

/// The height function of an order-`n` matrix: the `(n+1) x (n+1)` grid
/// `h = i + j - 2c` where `c` is the corner-sum grid.
///
/// The boundary is the fixed staircase `h(0, j) = j`, `h(i, 0) = i`,
/// `h(n, j) = n - j`, `h(i, n) = n - i`, and adjacent values differ by
/// exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightFunction {
    n: usize,
    values: Vec<i32>,
}

impl HeightFunction {
    /// Validates a height grid.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, CoreError> {
        let m = rows.len();
        if m < 2 {
            return Err(CoreError::NotSquare { rows: m, cols: rows.first().map_or(0, Vec::len) });
        }
        let n = m - 1;
        for row in rows {
            if row.len() != m {
                return Err(CoreError::NotSquare { rows: m, cols: row.len() });
            }
        }
        for i in 0..=n {
            for j in 0..=n {
                if (rows[i][j] - (i + j) as i64).rem_euclid(2) != 0 {
                    return Err(CoreError::ParityViolated { row: i, col: j });
                }
            }
        }
        for j in 0..=n {
            if rows[0][j] != j as i64 || rows[n][j] != (n - j) as i64 {
                return Err(invariant("height boundary must be the fixed staircase"));
            }
        }
        for i in 0..=n {
            if rows[i][0] != i as i64 || rows[i][n] != (n - i) as i64 {
                return Err(invariant("height boundary must be the fixed staircase"));
            }
        }
        for i in 0..=n {
            for j in 0..=n {
                if i > 0 && (rows[i][j] - rows[i - 1][j]).abs() != 1 {
                    return Err(invariant("adjacent heights must differ by exactly 1"));
                }
                if j > 0 && (rows[i][j] - rows[i][j - 1]).abs() != 1 {
                    return Err(invariant("adjacent heights must differ by exactly 1"));
                }
            }
        }
        let values = rows.iter().flatten().map(|&v| v as i32).collect();
        Ok(HeightFunction { n, values })
    }

    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Height at 0-based `(i, j)` with `i, j <= n`.
    pub fn value(&self, i: usize, j: usize) -> i32 {
        self.values[i * (self.n + 1) + j]
    }

    /// Grid rows as vectors of `i64`.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.values
            .chunks(self.n + 1)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    pub(crate) fn from_values_unchecked(n: usize, values: Vec<i32>) -> Self {
        debug_assert_eq!(values.len(), (n + 1) * (n + 1));
        HeightFunction { n, values }
    }

    pub(crate) fn values(&self) -> &[i32] {
        &self.values
    }
}

/// A proper three-coloring of the `(n+1) x (n+1)` grid induced by a height
/// function: the height reduced modulo 3.
///
/// Adjacent cells get distinct colors, the first row and column increase by
/// one color step per cell, and the last row and column decrease likewise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreeColoring {
    n: usize,
    colors: Vec<u8>,
}

impl ThreeColoring {
    /// Validates a color grid over `{0, 1, 2}`.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, CoreError> {
        let m = rows.len();
        if m < 2 {
            return Err(CoreError::NotSquare { rows: m, cols: rows.first().map_or(0, Vec::len) });
        }
        let n = m - 1;
        for row in rows {
            if row.len() != m {
                return Err(CoreError::NotSquare { rows: m, cols: row.len() });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !(0..=2).contains(&v) {
                    return Err(CoreError::BadEntryValue { row: i, col: j, value: v });
                }
            }
        }
        for i in 0..=n {
            for j in 0..=n {
                if i > 0 && rows[i][j] == rows[i - 1][j] {
                    return Err(invariant("adjacent cells must get distinct colors"));
                }
                if j > 0 && rows[i][j] == rows[i][j - 1] {
                    return Err(invariant("adjacent cells must get distinct colors"));
                }
            }
        }
        for j in 0..=n {
            if rows[0][j] != (j % 3) as i64
                || rows[n][j] != (n as i64 - j as i64).rem_euclid(3)
            {
                return Err(invariant("coloring boundary must step cyclically"));
            }
        }
        for i in 0..=n {
            if rows[i][0] != (i % 3) as i64
                || rows[i][n] != (n as i64 - i as i64).rem_euclid(3)
            {
                return Err(invariant("coloring boundary must step cyclically"));
            }
        }
        let colors = rows.iter().flatten().map(|&v| v as u8).collect();
        Ok(ThreeColoring { n, colors })
    }

    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Color at 0-based `(i, j)` with `i, j <= n`.
    pub fn color(&self, i: usize, j: usize) -> u8 {
        self.colors[i * (self.n + 1) + j]
    }

    /// Grid rows as vectors of `i64`.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.colors
            .chunks(self.n + 1)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }
}

/// A monotone triangle with bottom row `1..=n`: row `i` (0-based) holds
/// `i + 1` strictly increasing labels, and consecutive rows interlace weakly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    /// Validates a triangle given as rows of labels, shortest row first.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, CoreError> {
        let n = rows.len();
        if n == 0 {
            return Err(CoreError::NotSquare { rows: 0, cols: 0 });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(invariant("triangle row lengths must run 1..=n"));
            }
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > n as i64 {
                    return Err(CoreError::BadEntryValue { row: i, col: j, value: v });
                }
            }
            for k in 1..row.len() {
                if row[k - 1] >= row[k] {
                    return Err(invariant("triangle rows must strictly increase"));
                }
            }
        }
        for (k, &v) in rows[n - 1].iter().enumerate() {
            if v != (k + 1) as i64 {
                return Err(invariant("triangle bottom row must be 1..=n"));
            }
        }
        for i in 0..n - 1 {
            for k in 0..rows[i].len() {
                if !(rows[i + 1][k] <= rows[i][k] && rows[i][k] <= rows[i + 1][k + 1]) {
                    return Err(invariant("consecutive triangle rows must interlace"));
                }
            }
        }
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as u32).collect())
            .collect();
        Ok(MonotoneTriangle { n, rows })
    }

    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Triangle rows, shortest first; labels are 1-based column numbers.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows as vectors of `i64`.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<Vec<u32>>) -> Self {
        MonotoneTriangle { n, rows }
    }
}

/// Corner-sum grid of a matrix: partial sums of upper-left submatrices.
pub fn asm_to_corner_sum(a: &Asm) -> CornerSum {
    let n = a.order();
    let mut values = vec![0i32; (n + 1) * (n + 1)];
    for i in 1..=n {
        for j in 1..=n {
            values[i * (n + 1) + j] = values[(i - 1) * (n + 1) + j]
                + values[i * (n + 1) + j - 1]
                - values[(i - 1) * (n + 1) + j - 1]
                + i32::from(a.entry(i - 1, j - 1));
        }
    }
    CornerSum { n, values }
}

/// Recovers the matrix from its corner-sum grid by second differences.
pub fn corner_sum_to_asm(c: &CornerSum) -> Asm {
    let n = c.order();
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let v = c.value(i, j) - c.value(i - 1, j) - c.value(i, j - 1) + c.value(i - 1, j - 1);
            entries.push(v as i8);
        }
    }
    Asm::from_entries_unchecked(n, entries)
}

/// Height grid `h = i + j - 2c` of a corner-sum grid.
pub fn corner_sum_to_height(c: &CornerSum) -> HeightFunction {
    let n = c.order();
    let mut values = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            values.push((i + j) as i32 - 2 * c.value(i, j));
        }
    }
    HeightFunction { n, values }
}

/// Corner-sum grid `c = (i + j - h) / 2` of a height grid.
pub fn height_to_corner_sum(h: &HeightFunction) -> CornerSum {
    let n = h.order();
    let mut values = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            values.push(((i + j) as i32 - h.value(i, j)) / 2);
        }
    }
    CornerSum { n, values }
}

/// Reduces a height grid modulo 3 to a proper three-coloring.
pub fn height_to_coloring(h: &HeightFunction) -> ThreeColoring {
    let n = h.order();
    let colors = h.values.iter().map(|&v| v.rem_euclid(3) as u8).collect();
    ThreeColoring { n, colors }
}

/// Lifts a three-coloring back to the unique height grid reducing to it.
///
/// The lift anchors the fixed staircase boundary and scans row by row: a
/// color step of `+1 mod 3` forces a height step of `+1` and a step of
/// `-1 mod 3` forces `-1`. Any inconsistency with the column steps is
/// reported as [`CoreError::NoLift`] at the first offending cell.
pub fn coloring_to_height(t: &ThreeColoring) -> Result<HeightFunction, CoreError> {
    let n = t.order();
    let stride = n + 1;
    let mut values = vec![0i32; stride * stride];
    for j in 0..=n {
        values[j] = j as i32;
    }
    for i in 1..=n {
        values[i * stride] = i as i32;
        for j in 1..=n {
            let d = (i32::from(t.color(i, j)) - i32::from(t.color(i, j - 1))).rem_euclid(3);
            let h = values[i * stride + j - 1] + if d == 1 { 1 } else { -1 };
            if (h - values[(i - 1) * stride + j]).abs() != 1 {
                return Err(CoreError::NoLift { row: i, col: j });
            }
            values[i * stride + j] = h;
        }
    }
    for j in 0..=n {
        if values[n * stride + j] != (n - j) as i32 {
            return Err(CoreError::NoLift { row: n, col: j });
        }
    }
    Ok(HeightFunction { n, values })
}

/// Monotone triangle of a matrix: row `i` lists the 1-based columns whose
/// partial sum through row `i` equals 1.
pub fn asm_to_monotone(a: &Asm) -> MonotoneTriangle {
    let n = a.order();
    let mut partial = vec![0i32; n];
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..n {
            partial[j] += i32::from(a.entry(i, j));
            if partial[j] == 1 {
                row.push((j + 1) as u32);
            }
        }
        rows.push(row);
    }
    MonotoneTriangle { n, rows }
}

/// Recovers the matrix from a monotone triangle by differencing the row
/// indicator vectors.
pub fn monotone_to_asm(m: &MonotoneTriangle) -> Asm {
    let n = m.order();
    let mut prev = vec![0i8; n];
    let mut entries = Vec::with_capacity(n * n);
    for row in &m.rows {
        let mut cur = vec![0i8; n];
        for &v in row {
            cur[(v - 1) as usize] = 1;
        }
        for j in 0..n {
            entries.push(cur[j] - prev[j]);
        }
        prev = cur;
    }
    Asm::from_entries_unchecked(n, entries)
}

#[cfg(test)]
pub(crate) mod test_atlas {
    //! The complete set of order-3 matrices with their companion forms, plus
    //! one order-4 example, frozen as ground truth for conversion tests.

    pub const ORDER3_ASMS: [[[i64; 3]; 3]; 7] = [
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 1, 0], [1, -1, 1], [0, 1, 0]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    ];

    pub const ORDER3_CORNER_SUMS: [[[i64; 4]; 4]; 7] = [
        [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
        [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
        [[0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2], [0, 1, 2, 3]],
        [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
        [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
        [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 1, 2], [0, 1, 2, 3]],
        [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 2, 2], [0, 1, 2, 3]],
    ];

    pub const ORDER3_HEIGHTS: [[[i64; 4]; 4]; 7] = [
        [[0, 1, 2, 3], [1, 2, 3, 2], [2, 3, 2, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [1, 2, 3, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [1, 2, 1, 2], [2, 3, 2, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [1, 2, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 2, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
    ];

    pub const ORDER3_TRIANGLES: [[&[i64]; 3]; 7] = [
        [&[3], &[2, 3], &[1, 2, 3]],
        [&[3], &[1, 3], &[1, 2, 3]],
        [&[2], &[2, 3], &[1, 2, 3]],
        [&[2], &[1, 3], &[1, 2, 3]],
        [&[2], &[1, 2], &[1, 2, 3]],
        [&[1], &[1, 3], &[1, 2, 3]],
        [&[1], &[1, 2], &[1, 2, 3]],
    ];

    pub const ORDER4_ASM: [[i64; 4]; 4] =
        [[0, 1, 0, 0], [1, -1, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]];

    pub const ORDER4_TRIANGLE: [&[i64]; 4] =
        [&[2], &[1, 3], &[1, 3, 4], &[1, 2, 3, 4]];

    pub fn asm(idx: usize) -> super::Asm {
        let rows: Vec<Vec<i64>> = ORDER3_ASMS[idx].iter().map(|r| r.to_vec()).collect();
        super::validate_asm(&rows).unwrap()
    }
}
