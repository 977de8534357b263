//! Exact-integer helpers shared by the counting and polynomial layers.

use num_bigint::BigInt;
use num_traits::Zero;

/// Binomial coefficient with the extended convention: `binomial(n, k) = 0`
/// whenever `n < 0`, `k < 0`, or `k > n`. Every closed form in this crate
/// relies on out-of-range binomials silently vanishing, so all call sites go
/// through this wrapper rather than `num_integer` directly.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `base^exp` as an exact integer.
pub fn int_pow(base: u32, exp: usize) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// `(-1)^k` as a small multiplier.
pub fn alt_sign(k: usize) -> i32 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_table() {
        // Pascal's triangle rows 0..=5.
        let rows: [&[i64]; 6] = [
            &[1],
            &[1, 1],
            &[1, 2, 1],
            &[1, 3, 3, 1],
            &[1, 4, 6, 4, 1],
            &[1, 5, 10, 10, 5, 1],
        ];
        for (n, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n as i64, k as i64), BigInt::from(v));
            }
        }
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(-2, -2), BigInt::zero());
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..=12i64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal rule at ({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn int_pow_matches_repeated_multiplication() {
        for base in 0..=5u32 {
            let mut acc = BigInt::from(1);
            for exp in 0..=8usize {
                assert_eq!(int_pow(base, exp), acc);
                acc *= base;
            }
        }
    }

    #[test]
    fn alt_sign_alternates() {
        assert_eq!(alt_sign(0), 1);
        assert_eq!(alt_sign(1), -1);
        assert_eq!(alt_sign(2), 1);
        assert_eq!(alt_sign(7), -1);
    }
}
