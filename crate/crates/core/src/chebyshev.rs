//! Generalized Chebyshev polynomials with exact integer coefficients.
//!
//! The family depends on an integer parameter `s >= 1`:
//!
//! ```text
//! T_0 = 1,   T_1 = (s - 1) X,   T_{k+2} = s X T_{k+1} - T_k.
//! ```
//!
//! At `s = 2` this is exactly the classical Chebyshev recurrence of the first
//! kind, so `T_k(cos t) = cos(k t)` there. Two engines produce the same
//! family: the three-term recurrence above and a closed form for each
//! coefficient; [`classical_first_kind`] is a third, self-contained generator
//! for the `s = 2` case kept as an independent cross-check.
//!
//! Polynomials are dense ascending coefficient vectors over arbitrary
//! precision integers; the zero polynomial is the empty vector (which the
//! degenerate case `s = 1` actually produces, e.g. `T_1 = 0`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{alt_sign, binomial, int_pow};
use crate::error::Error;

/// A polynomial in one variable with exact integer coefficients, stored
/// densely by ascending degree with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial {
            coeffs: vec![BigInt::from(1)],
        }
    }

    /// Build from ascending coefficients; trailing zeros are trimmed so that
    /// equality is equality of polynomials.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Polynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Ascending coefficients, constant term first; empty for the zero
    /// polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^degree` (zero beyond the stored length).
    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation in floating point.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_f64().unwrap_or(f64::NAN)
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (degree, coeff) in self.coeffs.iter().enumerate().rev() {
            if coeff.is_zero() {
                continue;
            }
            if first {
                write!(f, "{coeff}")?;
                first = false;
            } else if coeff.sign() == num_bigint::Sign::Minus {
                write!(f, " - {}", -coeff)?;
            } else {
                write!(f, " + {coeff}")?;
            }
            match degree {
                0 => {}
                1 => write!(f, "*X")?,
                d => write!(f, "*X^{d}")?,
            }
        }
        Ok(())
    }
}

/// `T_k` for the given `s`, by running the three-term recurrence from the
/// base cases.
pub fn chebyshev_recurrence(s: u32, k: usize) -> Result<Polynomial, Error> {
    if s == 0 {
        return Err(Error::InvalidGroundSize);
    }
    let mut prev = Polynomial::one();
    if k == 0 {
        return Ok(prev);
    }
    let mut curr = Polynomial::from_coeffs(vec![BigInt::zero(), BigInt::from(s) - 1]);
    for _ in 1..k {
        let next = recurrence_step(s, &curr, &prev);
        prev = std::mem::replace(&mut curr, next);
    }
    Ok(curr)
}

/// `s X * curr - prev`.
fn recurrence_step(s: u32, curr: &Polynomial, prev: &Polynomial) -> Polynomial {
    let s = BigInt::from(s);
    let mut coeffs = vec![BigInt::zero(); curr.coeffs.len() + 1];
    for (degree, coeff) in curr.coeffs.iter().enumerate() {
        coeffs[degree + 1] = coeff * &s;
    }
    for (degree, coeff) in prev.coeffs.iter().enumerate() {
        coeffs[degree] -= coeff;
    }
    Polynomial::from_coeffs(coeffs)
}

/// `T_n` for the given `s`, assembled coefficient by coefficient from the
/// closed form: for `n >= 1` and `n - m` even,
///
/// ```text
/// [X^m] T_n = (-1)^((n-m)/2) ( C((n+m)/2, (n-m)/2) s^m
///                             - C((n+m)/2 - 1, (n-m)/2) s^(m-1) )
/// ```
///
/// with out-of-range binomials equal to zero (which in particular kills the
/// formal `s^(m-1)` term when `m = 0`). `n = 0` is the base case `1`.
pub fn chebyshev_closed_form(s: u32, n: usize) -> Result<Polynomial, Error> {
    if s == 0 {
        return Err(Error::InvalidGroundSize);
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut m = n % 2;
    while m <= n {
        let half_sum = ((n + m) / 2) as i64;
        let half_diff = ((n - m) / 2) as i64;
        let lead = binomial(half_sum, half_diff);
        let correction = binomial(half_sum - 1, half_diff);
        let mut term = lead * int_pow(s, m);
        if !correction.is_zero() {
            // correction != 0 forces m >= 1, so m - 1 cannot underflow
            term -= correction * int_pow(s, m - 1);
        }
        coeffs[m] = term * alt_sign(half_diff as usize);
        m += 2;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Classical Chebyshev polynomials of the first kind via their own
/// `2X`-recurrence (`T_0 = 1`, `T_1 = X`, `T_{k+1} = 2X T_k - T_{k-1}`),
/// written without reference to the generalized engines so it can serve as
/// an independent oracle for `s = 2`.
pub fn classical_first_kind(k: usize) -> Polynomial {
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    if k == 0 {
        return Polynomial::from_coeffs(prev);
    }
    let mut curr: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(1)];
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); curr.len() + 1];
        for (degree, coeff) in curr.iter().enumerate() {
            next[degree + 1] = coeff * 2;
        }
        for (degree, coeff) in prev.iter().enumerate() {
            next[degree] -= coeff;
        }
        prev = std::mem::replace(&mut curr, next);
    }
    Polynomial::from_coeffs(curr)
}
