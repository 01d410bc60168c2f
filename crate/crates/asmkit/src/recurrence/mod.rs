//! The octahedron and cube recurrences over Laurent polynomials.
//!
//! Both recurrences divide a sum of products of earlier values by a single
//! earlier value, and both divisions are exact over the integers, so every
//! computed value is again a Laurent polynomial with integer coefficients.
//! Running the octahedron recurrence from two initial planes of independent
//! variables and reading the exponents of each monomial of the result
//! recovers, matrix by matrix, the pairs of alternating-sign matrices of two
//! adjacent orders in which the larger extends the smaller; [`extract_pairs`]
//! performs that decoding. The audits check the shape claims the recurrences
//! promise (all coefficients 1, exponents confined to a small window).

mod poly;

use std::collections::HashMap;
use std::error::Error;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::core::{validate_asm, Asm};

pub use poly::{exact_divide, Layer, LaurentPoly, Monomial, VarId};

/// Errors raised by polynomial division, the audits, and pair extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    /// Exact division got stuck at this leading term of the remainder.
    NotDivisible { leading: Monomial },
    /// A computed polynomial violates the promised shape.
    AuditFailed { detail: String },
    /// A monomial does not decode to a valid pair of matrices.
    DecodeFailed { detail: String },
}

impl fmt::Display for RecurrenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurrenceError::NotDivisible { leading } => {
                write!(f, "division is not exact at leading term {leading}")
            }
            RecurrenceError::AuditFailed { detail } => write!(f, "audit failed: {detail}"),
            RecurrenceError::DecodeFailed { detail } => write!(f, "decode failed: {detail}"),
        }
    }
}

impl Error for RecurrenceError {}

/// Sites `(i, j)` with `|i| + |j| <= radius` and `i + j` of the same parity
/// as `radius`.
fn diamond(radius: i32) -> Vec<(i32, i32)> {
    let mut sites = Vec::new();
    for i in -radius..=radius {
        let span = radius - i.abs();
        for j in -span..=span {
            if (i + j - radius) % 2 == 0 {
                sites.push((i, j));
            }
        }
    }
    sites
}

/// The value `f(0, 0, n)` of the octahedron recurrence
///
/// ```text
/// f(i, j, k+1) = (f(i+1, j, k) f(i-1, j, k) + lambda f(i, j+1, k) f(i, j-1, k)) / f(i, j, k-1)
/// ```
///
/// started from a plane of variables `x(i, j)` at level -1 and a plane
/// `y(i, j)` at level 0. Every division along the way is exact; the levels
/// are filled bottom-up and each level is computed in parallel.
pub fn octahedron(n: usize, lambda: &BigInt) -> LaurentPoly {
    let ni = n as i32;
    let mut below: HashMap<(i32, i32), LaurentPoly> = diamond(ni + 1)
        .into_iter()
        .map(|(i, j)| ((i, j), LaurentPoly::variable(VarId::plane(Layer::X, i, j))))
        .collect();
    let mut level: HashMap<(i32, i32), LaurentPoly> = diamond(ni)
        .into_iter()
        .map(|(i, j)| ((i, j), LaurentPoly::variable(VarId::plane(Layer::Y, i, j))))
        .collect();
    for k in 1..=ni {
        let next: HashMap<(i32, i32), LaurentPoly> = diamond(ni - k)
            .into_par_iter()
            .map(|(i, j)| {
                let horizontal = &level[&(i + 1, j)] * &level[&(i - 1, j)];
                let vertical = (&level[&(i, j + 1)] * &level[&(i, j - 1)]).scale(lambda);
                let numerator = &horizontal + &vertical;
                let value = exact_divide(&numerator, &below[&(i, j)])
                    .expect("the octahedron step divides exactly");
                ((i, j), value)
            })
            .collect();
        below = level;
        level = next;
    }
    level.remove(&(0, 0)).expect("the target site is computed")
}

/// Checks that every coefficient of an octahedron value is 1 and every
/// exponent lies in `{-1, 0, 1}`; returns the number of terms.
pub fn audit_octahedron(poly: &LaurentPoly) -> Result<usize, RecurrenceError> {
    for (mono, coeff) in poly.terms() {
        if !coeff.is_one() {
            return Err(RecurrenceError::AuditFailed {
                detail: format!("coefficient {coeff} on {mono}"),
            });
        }
        for &(var, exp) in mono.vars() {
            if !(-1..=1).contains(&exp) {
                return Err(RecurrenceError::AuditFailed {
                    detail: format!("exponent {exp} on {var}"),
                });
            }
        }
    }
    Ok(poly.num_terms())
}

/// A pair of matrices of adjacent orders decoded from one octahedron
/// monomial: `upper` has order one larger than `lower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatiblePair {
    pub lower: Asm,
    pub upper: Asm,
}

/// Decodes every monomial of `octahedron(n, 1)` into a [`CompatiblePair`]:
/// the negated `x` exponents fill an order-`n` window and the `y` exponents
/// an order-`n+1` window, both read along diagonals. Pairs come out in the
/// canonical term order of the polynomial.
pub fn extract_pairs(poly: &LaurentPoly) -> Result<Vec<CompatiblePair>, RecurrenceError> {
    let mut order = 0i32;
    for (mono, _) in poly.terms() {
        for &(var, _) in mono.vars() {
            if var.k.is_some() || var.layer == Layer::Z {
                return Err(RecurrenceError::DecodeFailed {
                    detail: format!("unexpected variable {var}"),
                });
            }
            if var.layer == Layer::Y {
                order = order.max(var.i.abs() + var.j.abs());
            }
        }
    }
    if poly.is_zero() || order == 0 {
        return Err(RecurrenceError::DecodeFailed {
            detail: "no y variables to fix the order".into(),
        });
    }

    let window = |i: i32, j: i32, offset: i32, side: i32| -> Result<(usize, usize), RecurrenceError> {
        let du = i + j + offset;
        let dv = j - i + offset;
        if du.rem_euclid(2) != 0 || dv.rem_euclid(2) != 0 {
            return Err(RecurrenceError::DecodeFailed {
                detail: format!("site ({i},{j}) is off the diagonal grid"),
            });
        }
        let (u, v) = (du / 2, dv / 2);
        if !(0..side).contains(&u) || !(0..side).contains(&v) {
            return Err(RecurrenceError::DecodeFailed {
                detail: format!("site ({i},{j}) falls outside the window"),
            });
        }
        Ok((u as usize, v as usize))
    };

    let mut pairs = Vec::with_capacity(poly.num_terms());
    for (mono, coeff) in poly.terms() {
        if !coeff.is_one() {
            return Err(RecurrenceError::DecodeFailed {
                detail: format!("coefficient {coeff} on {mono} is not 1"),
            });
        }
        let mut lower = vec![vec![0i64; order as usize]; order as usize];
        let mut upper = vec![vec![0i64; order as usize + 1]; order as usize + 1];
        for &(var, exp) in mono.vars() {
            match var.layer {
                Layer::X => {
                    let (u, v) = window(var.i, var.j, order - 1, order)?;
                    lower[u][v] = -i64::from(exp);
                }
                Layer::Y => {
                    let (u, v) = window(var.i, var.j, order, order + 1)?;
                    upper[u][v] = i64::from(exp);
                }
                Layer::Z => unreachable!("z variables were rejected above"),
            }
        }
        let lower = validate_asm(&lower).map_err(|e| RecurrenceError::DecodeFailed {
            detail: format!("lower window of {mono}: {e}"),
        })?;
        let upper = validate_asm(&upper).map_err(|e| RecurrenceError::DecodeFailed {
            detail: format!("upper window of {mono}: {e}"),
        })?;
        pairs.push(CompatiblePair { lower, upper });
    }
    Ok(pairs)
}

/// The site at which [`cube`] evaluates the recurrence for a given `n`:
/// `i = (n+2)/3`, `j = (n-i+1)/2`, `k = n - i - j`, so `i + j + k = n`.
pub fn cube_target(n: usize) -> (i32, i32, i32) {
    assert!(n >= 1, "order must be positive");
    let i = (n + 2) / 3;
    let j = (n - i + 1) / 2;
    let k = n - i - j;
    (i as i32, j as i32, k as i32)
}

/// The value of the cube recurrence
///
/// ```text
/// f(i,j,k) = (f(i-1,j,k) f(i,j-1,k-1) + f(i,j-1,k) f(i-1,j,k-1) + f(i,j,k-1) f(i-1,j-1,k))
///            / f(i-1,j-1,k-1)
/// ```
///
/// at [`cube_target`]`(n)`, started from three planes of variables:
/// `x(i,j,k)` where `i + j + k = -1`, `y(i,j,k)` on the zero plane, and
/// `z(i,j,k)` where `i + j + k = 1`.
pub fn cube(n: usize) -> LaurentPoly {
    let mut memo = HashMap::new();
    cube_at(cube_target(n), &mut memo)
}

fn cube_at(site: (i32, i32, i32), memo: &mut HashMap<(i32, i32, i32), LaurentPoly>) -> LaurentPoly {
    if let Some(value) = memo.get(&site) {
        return value.clone();
    }
    let (i, j, k) = site;
    let plane = i + j + k;
    let value = if plane <= 1 {
        debug_assert!(plane >= -1, "recursion stays above the x plane");
        let layer = match plane {
            -1 => Layer::X,
            0 => Layer::Y,
            _ => Layer::Z,
        };
        LaurentPoly::variable(VarId::space(layer, i, j, k))
    } else {
        let a = &cube_at((i - 1, j, k), memo) * &cube_at((i, j - 1, k - 1), memo);
        let b = &cube_at((i, j - 1, k), memo) * &cube_at((i - 1, j, k - 1), memo);
        let c = &cube_at((i, j, k - 1), memo) * &cube_at((i - 1, j - 1, k), memo);
        let numerator = &(&a + &b) + &c;
        exact_divide(&numerator, &cube_at((i - 1, j - 1, k - 1), memo))
            .expect("the cube step divides exactly")
    };
    memo.insert(site, value.clone());
    value
}

/// Checks that every coefficient of a cube value is 1 and every exponent
/// lies in `[-1, 4]`; returns the number of terms.
pub fn audit_cube(poly: &LaurentPoly) -> Result<usize, RecurrenceError> {
    for (mono, coeff) in poly.terms() {
        if !coeff.is_one() {
            return Err(RecurrenceError::AuditFailed {
                detail: format!("coefficient {coeff} on {mono}"),
            });
        }
        for &(var, exp) in mono.vars() {
            if !(-1..=4).contains(&exp) {
                return Err(RecurrenceError::AuditFailed {
                    detail: format!("exponent {exp} on {var}"),
                });
            }
        }
    }
    Ok(poly.num_terms())
}
