//! Integer-coefficient polynomials in the field size `q`, plus exact
//! interpolation with a degree bound.
//!
//! Structure constants of the Hecke algebra are polynomial in `q` with
//! integer coefficients, so counting points over a handful of small fields
//! and interpolating recovers them exactly. Interpolation goes through
//! arbitrary-precision rationals and *fails loudly* if a coefficient comes
//! out non-integral or a spare data point misses the curve — either one
//! means a counting bug or a wrong degree bound, never something to paper
//! over.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in one variable `q` with arbitrary-precision integer
/// coefficients, stored in ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPolynomial::from_coeffs(vec![c.into()])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// Ascending coefficients as i64, for the JSON wire form. Errors if any
    /// coefficient falls outside the i64 range.
    pub fn coeffs_i64(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_i64().ok_or_else(|| {
                    Error::invalid(format!("coefficient {c} does not fit in an i64"))
                })
            })
            .collect()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Recovers the unique integer polynomial of degree `<= degree_bound`
/// through the first `degree_bound + 1` points and verifies that every
/// remaining point lies on it.
///
/// Points are `(q, value)` pairs with distinct `q >= 2`. Non-integer
/// coefficients or a leftover mismatch raise an interpolation-inconsistency
/// error.
pub fn interpolate_bounded(points: &[(i64, BigInt)], degree_bound: usize) -> Result<QPolynomial> {
    if points.len() < degree_bound + 1 {
        return Err(Error::invalid(format!(
            "need at least {} points for degree bound {degree_bound}, got {}",
            degree_bound + 1,
            points.len()
        )));
    }
    for (q, _) in points {
        if *q < 2 {
            return Err(Error::invalid(format!("interpolation point q={q} < 2")));
        }
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].0 == points[j].0 {
                return Err(Error::invalid(format!(
                    "duplicate interpolation abscissa q={}",
                    points[i].0
                )));
            }
        }
    }

    let base = &points[..degree_bound + 1];
    // Lagrange interpolation over exact rationals.
    let mut acc = vec![BigRational::zero(); degree_bound + 1];
    for (i, (qi, vi)) in base.iter().enumerate() {
        // Numerator polynomial prod_{j != i} (x - q_j), built incrementally.
        let mut numer = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (qj, _)) in base.iter().enumerate() {
            if j == i {
                continue;
            }
            let qj_rat = BigRational::from_integer(BigInt::from(*qj));
            let mut next = vec![BigRational::zero(); numer.len() + 1];
            for (k, c) in numer.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &qj_rat;
            }
            numer = next;
            denom *= BigRational::from_integer(BigInt::from(qi - qj));
        }
        let scale = BigRational::from_integer(vi.clone()) / denom;
        for (k, c) in numer.into_iter().enumerate() {
            acc[k] += c * &scale;
        }
    }

    let mut coeffs = Vec::with_capacity(acc.len());
    for (k, c) in acc.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!(
                "coefficient of q^{k} is the non-integer {c}"
            )));
        }
        coeffs.push(c.to_integer());
    }
    let poly = QPolynomial::from_coeffs(coeffs);

    for (q, v) in &points[degree_bound + 1..] {
        let got = poly.eval_i64(*q);
        if got != *v {
            return Err(Error::Interpolation(format!(
                "spare point q={q} expected {v}, polynomial {poly} gives {got}"
            )));
        }
    }
    Ok(poly)
}
