//! The cube-root generating series and its Hankel determinants.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{count_formula, EnumerateError};

/// First `count` coefficients of the series `(1 - (1 - 9x)^(1/3)) / (3x)`,
/// by exact rational binomial expansion: the `x^k` coefficient equals
/// `-binom(1/3, k+1) * (-9)^(k+1) / 3`. Every coefficient is a positive
/// integer; anything else is reported as
/// [`EnumerateError::NonIntegerCoefficient`].
pub fn catalan3_coefficients(count: usize) -> Result<Vec<BigUint>, EnumerateError> {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let three = BigRational::from_integer(BigInt::from(3));
    let mut binom = third.clone();
    let mut power = BigInt::from(-9);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let value = -(&binom * BigRational::from_integer(power.clone())) / &three;
        if !value.is_integer() || value.is_negative() {
            return Err(EnumerateError::NonIntegerCoefficient { index: k });
        }
        out.push(value.to_integer().to_biguint().expect("sign checked"));
        let step = BigRational::from_integer(BigInt::from(k as i64 + 1));
        let div = BigRational::from_integer(BigInt::from(k as i64 + 2));
        binom = &binom * (&third - &step) / div;
        power *= -9;
    }
    Ok(out)
}

/// Outcome of the Hankel determinant identity at order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelReport {
    pub n: usize,
    /// Determinant of the `n x n` Hankel matrix of series coefficients.
    pub determinant: BigInt,
    /// `3^binom(n, 2)` times the order-`n` matrix count.
    pub predicted: BigInt,
    pub equal: bool,
}

/// Builds the Hankel matrix `m[i][j] = a[i + j]` from the series
/// coefficients and compares its determinant with
/// `3^binom(n, 2) * count_formula(n)`. Fraction-free elimination keeps all
/// intermediate values integral.
pub fn hankel_identity(n: usize) -> Result<HankelReport, EnumerateError> {
    assert!(n >= 1, "order must be at least 1");
    let coeffs = catalan3_coefficients(2 * n - 1)?;
    let mut matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(coeffs[i + j].clone())).collect())
        .collect();
    let determinant = bareiss_determinant(&mut matrix);
    let mut predicted = BigInt::from(count_formula(n));
    for _ in 0..n * (n - 1) / 2 {
        predicted *= 3;
    }
    let equal = determinant == predicted;
    Ok(HankelReport {
        n,
        determinant,
        predicted,
        equal,
    })
}

/// Bareiss elimination: each stage's entries are exact minors, so the
/// division by the previous pivot never leaves a remainder. Falls back to a
/// row swap (flipping the sign) when a pivot vanishes.
fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}
