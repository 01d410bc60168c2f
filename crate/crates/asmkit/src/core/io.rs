//! Text and JSON forms of the representation types, plus the conversion hub
//! used by the command-line interface.
//!
//! The JSON form of every object is `{"kind": ..., "n": ..., "data": ...}`.
//! Matrix-like kinds serialize `data` as an array of row arrays; monotone
//! triangles as their rows, shortest first; six-vertex states as an object
//! with `horizontal_right` and `vertical_up` bit rows. The text form is one
//! whitespace-separated row per line, except six-vertex states, which read
//! and write the tile glyph grid of [`super::TILE_GLYPHS`].

use super::ice::tile_glyph_grid;
use super::{
    asm_to_corner_sum, asm_to_monotone, asm_to_six_vertex, coloring_to_height, corner_sum_to_asm,
    corner_sum_to_height, height_to_coloring, height_to_corner_sum, monotone_to_asm,
    six_vertex_to_asm, tile_type_map, validate_asm, Asm, CoreError, CornerSum, HeightFunction,
    MonotoneTriangle, SixVertexState, ThreeColoring, TileKind,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;
use std::str::FromStr;

/// Tag for the convertible representation kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Asm,
    CornerSum,
    Height,
    Coloring,
    Monotone,
    SixVertex,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Asm,
        Kind::CornerSum,
        Kind::Height,
        Kind::Coloring,
        Kind::Monotone,
        Kind::SixVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Asm => "asm",
            Kind::CornerSum => "corner-sum",
            Kind::Height => "height",
            Kind::Coloring => "coloring",
            Kind::Monotone => "monotone",
            Kind::SixVertex => "six-vertex",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CoreError::InvariantViolated {
                kind: format!("unknown kind {s:?}"),
            })
    }
}

/// A value of any convertible representation kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Asm(Asm),
    CornerSum(CornerSum),
    Height(HeightFunction),
    Coloring(ThreeColoring),
    Monotone(MonotoneTriangle),
    SixVertex(SixVertexState),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Asm(_) => Kind::Asm,
            Object::CornerSum(_) => Kind::CornerSum,
            Object::Height(_) => Kind::Height,
            Object::Coloring(_) => Kind::Coloring,
            Object::Monotone(_) => Kind::Monotone,
            Object::SixVertex(_) => Kind::SixVertex,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Object::Asm(a) => a.order(),
            Object::CornerSum(c) => c.order(),
            Object::Height(h) => h.order(),
            Object::Coloring(t) => t.order(),
            Object::Monotone(m) => m.order(),
            Object::SixVertex(s) => s.order(),
        }
    }

    /// Converts to the matrix form. Total for every kind: the coloring lift
    /// cannot fail for a validated coloring.
    pub fn to_asm(&self) -> Asm {
        match self {
            Object::Asm(a) => a.clone(),
            Object::CornerSum(c) => corner_sum_to_asm(c),
            Object::Height(h) => corner_sum_to_asm(&height_to_corner_sum(h)),
            Object::Coloring(t) => {
                let h = coloring_to_height(t)
                    .expect("validated colorings always lift to a height function");
                corner_sum_to_asm(&height_to_corner_sum(&h))
            }
            Object::Monotone(m) => monotone_to_asm(m),
            Object::SixVertex(s) => six_vertex_to_asm(s),
        }
    }

    /// Converts to any target kind via the matrix form.
    pub fn convert(&self, to: Kind) -> Object {
        if self.kind() == to {
            return self.clone();
        }
        let a = self.to_asm();
        match to {
            Kind::Asm => Object::Asm(a),
            Kind::CornerSum => Object::CornerSum(asm_to_corner_sum(&a)),
            Kind::Height => Object::Height(corner_sum_to_height(&asm_to_corner_sum(&a))),
            Kind::Coloring => Object::Coloring(height_to_coloring(&corner_sum_to_height(
                &asm_to_corner_sum(&a),
            ))),
            Kind::Monotone => Object::Monotone(asm_to_monotone(&a)),
            Kind::SixVertex => Object::SixVertex(asm_to_six_vertex(&a)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ObjectDto {
    kind: String,
    n: usize,
    data: Value,
}

fn rows_to_value(rows: &[Vec<i64>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(|&v| Value::from(v)).collect()))
            .collect(),
    )
}

fn bit_rows_to_value(rows: &[Vec<u8>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(|&v| Value::from(v)).collect()))
            .collect(),
    )
}

/// JSON form `{"kind", "n", "data"}` of an object.
pub fn object_to_json(o: &Object) -> Value {
    let data = match o {
        Object::Asm(a) => rows_to_value(&a.to_rows()),
        Object::CornerSum(c) => rows_to_value(&c.to_rows()),
        Object::Height(h) => rows_to_value(&h.to_rows()),
        Object::Coloring(t) => rows_to_value(&t.to_rows()),
        Object::Monotone(m) => rows_to_value(&m.to_rows()),
        Object::SixVertex(s) => {
            let mut map = serde_json::Map::new();
            map.insert(
                "horizontal_right".into(),
                bit_rows_to_value(&s.horizontal_rows()),
            );
            map.insert("vertical_up".into(), bit_rows_to_value(&s.vertical_rows()));
            Value::Object(map)
        }
    };
    serde_json::to_value(ObjectDto {
        kind: o.kind().name().to_string(),
        n: o.order(),
        data,
    })
    .expect("object serialization cannot fail")
}

fn value_to_rows(v: &Value) -> Result<Vec<Vec<i64>>, CoreError> {
    let arr = v.as_array().ok_or_else(|| CoreError::InvariantViolated {
        kind: "data must be an array of rows".into(),
    })?;
    arr.iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| CoreError::InvariantViolated {
                kind: "each row must be an array".into(),
            })?;
            row.iter()
                .map(|x| {
                    x.as_i64().ok_or_else(|| CoreError::InvariantViolated {
                        kind: format!("row entry {x} must be an integer"),
                    })
                })
                .collect()
        })
        .collect()
}

fn bit_grid(v: &Value, key: &str) -> Result<Vec<Vec<bool>>, CoreError> {
    let field = v.get(key).ok_or_else(|| CoreError::InvariantViolated {
        kind: format!("six-vertex data must contain {key:?}"),
    })?;
    let rows = value_to_rows(field)?;
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|&b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    other => Err(CoreError::InvariantViolated {
                        kind: format!("edge bit must be 0 or 1, got {other}"),
                    }),
                })
                .collect()
        })
        .collect()
}

/// Parses and validates an object from its JSON form.
pub fn object_from_json(v: &Value) -> Result<Object, CoreError> {
    let dto: ObjectDto =
        serde_json::from_value(v.clone()).map_err(|e| CoreError::InvariantViolated {
            kind: format!("object must have kind, n, and data fields: {e}"),
        })?;
    let kind = Kind::from_str(&dto.kind)?;
    let object = match kind {
        Kind::Asm => Object::Asm(validate_asm(&value_to_rows(&dto.data)?)?),
        Kind::CornerSum => Object::CornerSum(CornerSum::new(&value_to_rows(&dto.data)?)?),
        Kind::Height => Object::Height(HeightFunction::new(&value_to_rows(&dto.data)?)?),
        Kind::Coloring => Object::Coloring(ThreeColoring::new(&value_to_rows(&dto.data)?)?),
        Kind::Monotone => Object::Monotone(MonotoneTriangle::new(&value_to_rows(&dto.data)?)?),
        Kind::SixVertex => {
            let hor = bit_grid(&dto.data, "horizontal_right")?;
            let ver = bit_grid(&dto.data, "vertical_up")?;
            Object::SixVertex(SixVertexState::new(dto.n, &hor, &ver)?)
        }
    };
    if object.order() != dto.n {
        return Err(CoreError::InvariantViolated {
            kind: format!("declared n = {} but data has order {}", dto.n, object.order()),
        });
    }
    Ok(object)
}

/// Parses whitespace-separated integer rows; `;` also separates rows, so a
/// matrix can be given on a single line.
pub fn parse_matrix_text(s: &str) -> Result<Vec<Vec<i64>>, CoreError> {
    let mut rows = Vec::new();
    for line in s.replace(';', "\n").lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<i64>, CoreError> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| CoreError::InvariantViolated {
                    kind: format!("cannot parse {tok:?} as an integer"),
                })
            })
            .collect();
        rows.push(row?);
    }
    Ok(rows)
}

fn glyph_grid_to_asm(s: &str) -> Result<Asm, CoreError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for line in s.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<i64>, CoreError> = line
            .chars()
            .map(|ch| {
                let tile = TileKind::from_glyph(ch).ok_or_else(|| CoreError::InvariantViolated {
                    kind: format!("unknown tile glyph {ch:?}"),
                })?;
                Ok(match tile {
                    TileKind::Gasket => 1,
                    TileKind::TurnedGasket => -1,
                    _ => 0,
                })
            })
            .collect();
        rows.push(row?);
    }
    validate_asm(&rows)
}

/// Parses and validates an object from its text form.
pub fn object_from_text(kind: Kind, s: &str) -> Result<Object, CoreError> {
    match kind {
        Kind::Asm => Ok(Object::Asm(validate_asm(&parse_matrix_text(s)?)?)),
        Kind::CornerSum => Ok(Object::CornerSum(CornerSum::new(&parse_matrix_text(s)?)?)),
        Kind::Height => Ok(Object::Height(HeightFunction::new(&parse_matrix_text(s)?)?)),
        Kind::Coloring => Ok(Object::Coloring(ThreeColoring::new(&parse_matrix_text(s)?)?)),
        Kind::Monotone => Ok(Object::Monotone(MonotoneTriangle::new(&parse_matrix_text(
            s,
        )?)?)),
        Kind::SixVertex => {
            let a = glyph_grid_to_asm(s)?;
            let state = asm_to_six_vertex(&a);
            let echo = tile_glyph_grid(&tile_type_map(&state), a.order());
            let normalized: String = s
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| format!("{l}\n"))
                .collect();
            if echo != normalized {
                return Err(CoreError::InvariantViolated {
                    kind: "tile glyphs are inconsistent with their matrix".into(),
                });
            }
            Ok(Object::SixVertex(state))
        }
    }
}

fn rows_to_text(rows: &[Vec<i64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Text form of an object.
pub fn object_to_text(o: &Object) -> String {
    match o {
        Object::Asm(a) => rows_to_text(&a.to_rows()),
        Object::CornerSum(c) => rows_to_text(&c.to_rows()),
        Object::Height(h) => rows_to_text(&h.to_rows()),
        Object::Coloring(t) => rows_to_text(&t.to_rows()),
        Object::Monotone(m) => rows_to_text(&m.to_rows()),
        Object::SixVertex(s) => tile_glyph_grid(&tile_type_map(s), s.order()),
    }
}
