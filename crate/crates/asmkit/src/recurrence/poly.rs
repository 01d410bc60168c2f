//! Sparse integer Laurent polynomials in named grid variables.
//!
//! Variables are grid sites tagged with a layer letter, monomials are sorted
//! sparse exponent lists, and polynomials map monomials to nonzero `BigInt`
//! coefficients in a `BTreeMap`, so iteration order, `Display` output, and
//! equality are all canonical.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::RecurrenceError;

/// The initial layer a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    X,
    Y,
    Z,
}

impl Layer {
    pub fn letter(self) -> char {
        match self {
            Layer::X => 'x',
            Layer::Y => 'y',
            Layer::Z => 'z',
        }
    }
}

/// A named variable: a layer letter and two or three grid coordinates.
///
/// The derived order (layer, then coordinates) fixes the order of variables
/// inside a monomial and, through it, the order of terms in a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub layer: Layer,
    pub i: i32,
    pub j: i32,
    pub k: Option<i32>,
}

impl VarId {
    /// A two-coordinate variable, printed as `x(i,j)`.
    pub fn plane(layer: Layer, i: i32, j: i32) -> Self {
        VarId { layer, i, j, k: None }
    }

    /// A three-coordinate variable, printed as `x(i,j,k)`.
    pub fn space(layer: Layer, i: i32, j: i32, k: i32) -> Self {
        VarId { layer, i, j, k: Some(k) }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            None => write!(f, "{}({},{})", self.layer.letter(), self.i, self.j),
            Some(k) => write!(f, "{}({},{},{})", self.layer.letter(), self.i, self.j, k),
        }
    }
}

/// A product of variable powers with nonzero integer exponents, kept sorted
/// by variable.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    vars: Vec<(VarId, i32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging
    /// repeats and dropping zero exponents.
    pub fn new(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Self {
        let mut vars: Vec<(VarId, i32)> = pairs.into_iter().collect();
        vars.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, i32)> = Vec::with_capacity(vars.len());
        for (v, e) in vars {
            match merged.last_mut() {
                Some((last, exp)) if *last == v => *exp += e,
                _ => merged.push((v, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        Monomial { vars: merged }
    }

    /// A single variable to the first power.
    pub fn variable(v: VarId) -> Self {
        Monomial { vars: vec![(v, 1)] }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    /// The (variable, exponent) pairs in variable order.
    pub fn vars(&self) -> &[(VarId, i32)] {
        &self.vars
    }

    /// The exponent of `v`, zero when absent.
    pub fn exponent(&self, v: VarId) -> i32 {
        self.vars
            .binary_search_by_key(&v, |&(w, _)| w)
            .map_or(0, |idx| self.vars[idx].1)
    }

    /// The product of two monomials.
    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + rhs.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), rhs.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        vars.push((va, ea));
                        a.next();
                    } else if vb < va {
                        vars.push((vb, eb));
                        b.next();
                    } else {
                        if ea + eb != 0 {
                            vars.push((va, ea + eb));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(_), None) => {
                    vars.extend(a.by_ref().copied());
                    break;
                }
                (None, Some(_)) => {
                    vars.extend(b.by_ref().copied());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { vars }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        for (idx, (v, e)) in self.vars.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}^{e}")?;
        }
        Ok(())
    }
}

/// A Laurent polynomial with `BigInt` coefficients; zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut poly = LaurentPoly::zero();
        poly.add_term(Monomial::one(), c);
        poly
    }

    pub fn variable(v: VarId) -> Self {
        let mut poly = LaurentPoly::zero();
        poly.add_term(Monomial::variable(v), BigInt::one());
        poly
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut poly = LaurentPoly::zero();
        for (m, c) in terms {
            poly.add_term(m, c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending monomial) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The polynomial scaled by an integer.
    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// The value after substituting 1 for every variable: the coefficient sum.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Divides `num` by `den` exactly, or reports the term where division gets
/// stuck. `den` must be nonzero.
///
/// Both operands are shifted by their per-variable minimum exponents so all
/// exponents become nonnegative, then divided as ordinary polynomials by
/// repeatedly cancelling leading terms under the lexicographic order on full
/// exponent vectors over the union of their variables; the shift difference
/// is reattached at the end. Leading-term cancellation terminates because
/// the leading vector strictly decreases and stays nonnegative.
pub fn exact_divide(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, RecurrenceError> {
    assert!(!den.is_zero(), "divisor must be nonzero");
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }

    let universe: Vec<VarId> = num
        .terms()
        .chain(den.terms())
        .flat_map(|(m, _)| m.vars().iter().map(|&(v, _)| v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let dense = |poly: &LaurentPoly| -> BTreeMap<Vec<i32>, BigInt> {
        poly.terms()
            .map(|(m, c)| {
                let exps: Vec<i32> = universe.iter().map(|&v| m.exponent(v)).collect();
                (exps, c.clone())
            })
            .collect()
    };
    let shift_of = |terms: &BTreeMap<Vec<i32>, BigInt>| -> Vec<i32> {
        let mut shift = vec![i32::MAX; universe.len()];
        for exps in terms.keys() {
            for (s, &e) in shift.iter_mut().zip(exps) {
                *s = (*s).min(e);
            }
        }
        shift
    };
    let rebase = |terms: BTreeMap<Vec<i32>, BigInt>, shift: &[i32]| -> BTreeMap<Vec<i32>, BigInt> {
        terms
            .into_iter()
            .map(|(exps, c)| {
                (
                    exps.iter().zip(shift).map(|(e, s)| e - s).collect(),
                    c,
                )
            })
            .collect()
    };
    let sparse = |exps: &[i32]| -> Monomial {
        Monomial::new(universe.iter().copied().zip(exps.iter().copied()))
    };

    let raw_num = dense(num);
    let raw_den = dense(den);
    let num_shift = shift_of(&raw_num);
    let den_shift = shift_of(&raw_den);
    let mut rem = rebase(raw_num, &num_shift);
    let den_terms: Vec<(Vec<i32>, BigInt)> = rebase(raw_den, &den_shift).into_iter().collect();
    let (lead_exp, lead_coeff) = den_terms.last().expect("divisor has a leading term");

    let mut quo: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    while let Some((rexp, rcoeff)) = rem.last_key_value() {
        let stuck = |rexp: &[i32]| {
            let original: Vec<i32> = rexp.iter().zip(&num_shift).map(|(e, s)| e + s).collect();
            RecurrenceError::NotDivisible {
                leading: sparse(&original),
            }
        };
        let mut qexp = Vec::with_capacity(universe.len());
        for (r, d) in rexp.iter().zip(lead_exp) {
            let e = r - d;
            if e < 0 {
                return Err(stuck(rexp));
            }
            qexp.push(e);
        }
        let (qc, leftover) = rcoeff.div_rem(lead_coeff);
        if !leftover.is_zero() {
            return Err(stuck(rexp));
        }
        for (dexp, dc) in &den_terms {
            let key: Vec<i32> = dexp.iter().zip(&qexp).map(|(a, b)| a + b).collect();
            let delta = dc * &qc;
            match rem.entry(key) {
                std::collections::btree_map::Entry::Vacant(slot) => {
                    slot.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut slot) => {
                    *slot.get_mut() -= delta;
                    if slot.get().is_zero() {
                        slot.remove();
                    }
                }
            }
        }
        quo.insert(qexp, qc);
    }

    Ok(LaurentPoly::from_terms(quo.into_iter().map(|(exps, c)| {
        let original: Vec<i32> = exps
            .iter()
            .zip(&num_shift)
            .zip(&den_shift)
            .map(|((e, ns), ds)| e + ns - ds)
            .collect();
        (sparse(&original), c)
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> VarId {
        VarId::plane(Layer::X, 0, 0)
    }

    fn y() -> VarId {
        VarId::plane(Layer::Y, 0, 0)
    }

    fn poly(terms: &[(&[(VarId, i32)], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            terms
                .iter()
                .map(|&(vars, c)| (Monomial::new(vars.iter().copied()), BigInt::from(c))),
        )
    }

    #[test]
    fn monomials_canonicalize() {
        let m = Monomial::new([(y(), 2), (x(), 1), (y(), -2)]);
        assert_eq!(m, Monomial::variable(x()));
        assert_eq!(m.exponent(x()), 1);
        assert_eq!(m.exponent(y()), 0);
        let a = Monomial::new([(x(), 2), (y(), 1)]);
        let b = Monomial::new([(x(), -2), (VarId::plane(Layer::Z, 0, 0), 3)]);
        let prod = a.mul(&b);
        assert_eq!(
            prod,
            Monomial::new([(y(), 1), (VarId::plane(Layer::Z, 0, 0), 3)])
        );
        assert!(Monomial::one().is_one());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(VarId::plane(Layer::X, 0, -1).to_string(), "x(0,-1)");
        assert_eq!(VarId::space(Layer::Z, 1, -1, 2).to_string(), "z(1,-1,2)");
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(
            Monomial::new([(y(), 2), (x(), -1)]).to_string(),
            "x(0,0)^-1*y(0,0)^2"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::constant(BigInt::from(7)).to_string(), "7");
        let p = poly(&[(&[(x(), 1)], 1), (&[(y(), 1)], -2), (&[], 3)]);
        assert_eq!(p.to_string(), "3 + 1*x(0,0)^1 + -2*y(0,0)^1");
    }

    #[test]
    fn arithmetic_collects_and_cancels() {
        let xv = LaurentPoly::variable(x());
        let yv = LaurentPoly::variable(y());
        let sum = &xv + &yv;
        assert_eq!(sum.num_terms(), 2);
        let zero = &sum + &sum.scale(&BigInt::from(-1));
        assert!(zero.is_zero());
        let diff = &xv + &yv.scale(&BigInt::from(-1));
        let product = &sum * &diff;
        assert_eq!(
            product,
            poly(&[(&[(x(), 2)], 1), (&[(y(), 2)], -1)])
        );
        assert_eq!(product.evaluate_at_one(), BigInt::zero());
        assert_eq!(sum.evaluate_at_one(), BigInt::from(2));
    }

    #[test]
    fn exact_division_handles_laurent_shifts() {
        // (y^-2 - x^2) / (y^-1 - x) = y^-1 + x
        let num = poly(&[(&[(y(), -2)], 1), (&[(x(), 2)], -1)]);
        let den = poly(&[(&[(y(), -1)], 1), (&[(x(), 1)], -1)]);
        let quotient = exact_divide(&num, &den).unwrap();
        assert_eq!(quotient, poly(&[(&[(y(), -1)], 1), (&[(x(), 1)], 1)]));
        // Single-term divisor: (x^-1 + x) / x^-1 = 1 + x^2.
        let num = poly(&[(&[(x(), -1)], 1), (&[(x(), 1)], 1)]);
        let den = poly(&[(&[(x(), -1)], 1)]);
        assert_eq!(
            exact_divide(&num, &den).unwrap(),
            poly(&[(&[], 1), (&[(x(), 2)], 1)])
        );
        // Round trip with a bigger random-ish product.
        let a = poly(&[(&[(x(), -1), (y(), 2)], 3), (&[(x(), 1)], -1), (&[], 5)]);
        let b = poly(&[(&[(y(), -3)], 2), (&[(x(), 2), (y(), 1)], 7)]);
        let product = &a * &b;
        assert_eq!(exact_divide(&product, &b).unwrap(), a);
        assert_eq!(exact_divide(&product, &a).unwrap(), b);
    }

    #[test]
    fn exact_division_of_zero_and_self() {
        let den = poly(&[(&[(x(), 1)], 1), (&[(y(), 1)], 1)]);
        assert!(exact_divide(&LaurentPoly::zero(), &den).unwrap().is_zero());
        assert_eq!(exact_divide(&den, &den).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn division_rejects_non_multiples() {
        let num = poly(&[(&[(x(), 2)], 1), (&[(y(), 1)], 1)]);
        let den = poly(&[(&[(x(), 1)], 1), (&[(y(), 1)], 1)]);
        let err = exact_divide(&num, &den).unwrap_err();
        assert_eq!(
            err,
            RecurrenceError::NotDivisible {
                leading: Monomial::new([(y(), 2)]),
            }
        );
        // Coefficients must divide over the integers.
        let err = exact_divide(
            &poly(&[(&[(x(), 1)], 2)]),
            &poly(&[(&[(x(), 1)], 3)]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            RecurrenceError::NotDivisible {
                leading: Monomial::variable(x()),
            }
        );
    }
}
