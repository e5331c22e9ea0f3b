//! Dodgson condensation: repeatedly replace a `k`×`k` table by the
//! `(k-1)`×`(k-1)` table of its contiguous 2×2 determinants, each divided by
//! the matching interior entry of the table two levels back. Every step is
//! the corner case `(1, n | 1, n)` of Sylvester's identity applied to a
//! contiguous submatrix, which is why the divisions are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Determinant by condensation. Fails with `ZeroInteriorMinor` when a
/// divisor vanishes; there is no fallback.
pub fn dodgson_condensation(m: &IntMatrix) -> Result<BigInt> {
    let n = m.order()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut current: Vec<Vec<BigInt>> = m.rows().map(<[BigInt]>::to_vec).collect();
    let mut previous: Option<Vec<Vec<BigInt>>> = None;
    let mut level = 0;
    while current.len() > 1 {
        level += 1;
        let size = current.len() - 1;
        let mut next = vec![vec![BigInt::zero(); size]; size];
        for r in 0..size {
            for c in 0..size {
                let cross = &current[r][c] * &current[r + 1][c + 1] - &current[r][c + 1] * &current[r + 1][c];
                next[r][c] = match &previous {
                    None => cross,
                    Some(prev) => {
                        let divisor = &prev[r + 1][c + 1];
                        if divisor.is_zero() {
                            return Err(Error::ZeroInteriorMinor { level, row: r + 2, col: c + 2 });
                        }
                        let (q, rem) = cross.div_rem(divisor);
                        if !rem.is_zero() {
                            return Err(Error::InexactDivision {
                                numerator: cross.to_string(),
                                divisor: divisor.to_string(),
                            });
                        }
                        q
                    }
                };
            }
        }
        previous = Some(std::mem::replace(&mut current, next));
    }
    Ok(current.swap_remove(0).swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn sample_3x3() {
        assert_eq!(dodgson_condensation(&ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn small_cases() {
        assert_eq!(dodgson_condensation(&ints(&[&[11]])).unwrap(), BigInt::from(11));
        assert_eq!(dodgson_condensation(&ints(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(dodgson_condensation(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn zero_interior_is_an_error() {
        let m = ints(&[&[1, 2, 3], &[4, 0, 6], &[7, 8, 10]]);
        assert_eq!(dodgson_condensation(&m), Err(Error::ZeroInteriorMinor { level: 2, row: 2, col: 2 }));
    }

    #[test]
    fn not_square() {
        assert!(matches!(dodgson_condensation(&IntMatrix::zeros(3, 2)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn four_by_four() {
        let m = ints(&[&[2, -1, 0, 3], &[1, 4, -2, 5], &[0, 7, 1, -3], &[6, 2, 2, 1]]);
        assert_eq!(dodgson_condensation(&m).unwrap(), crate::det::det(&m).unwrap());
    }
}
