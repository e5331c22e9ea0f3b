//! One-step fraction-free (Bareiss) elimination over the integers.
//!
//! Step `k` replaces every trailing entry by
//! `(p·a[r][c] − a[r][k]·a[k][c]) / prev`, where `p` is the current pivot and
//! `prev` the previous one. The numerator is a 2×2 determinant of
//! `k`-bordered minors, so Sylvester's identity makes the division exact;
//! the remainder is checked on every step regardless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pivot {
    /// 0-based elimination step.
    pub step: usize,
    /// 0-based row (in the original numbering) the pivot was taken from.
    pub pivot_row: usize,
    #[serde(serialize_with = "as_decimal")]
    pub pivot_value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationTrace {
    pub pivots: Vec<Pivot>,
    /// `-1` for an odd number of row swaps, `1` otherwise.
    pub sign: i8,
    /// `principal_minors[k]` is the leading `(k+1)`×`(k+1)` minor of the
    /// row-permuted input. Stops at the first zero when the matrix is
    /// singular.
    #[serde(serialize_with = "all_as_decimal")]
    pub principal_minors: Vec<BigInt>,
    /// Number of exact divisions performed.
    pub divisions: usize,
}

fn as_decimal<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn all_as_decimal<S: serde::Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(BigInt::to_string))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Pivoting {
    RowSwap,
    Forbidden,
}

fn exact_div(numerator: &BigInt, divisor: &BigInt) -> Result<BigInt> {
    let (q, r) = numerator.div_rem(divisor);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            numerator: numerator.to_string(),
            divisor: divisor.to_string(),
        });
    }
    Ok(q)
}

/// Working state of an elimination. `rows[k]` holds the current values of
/// the row occupying position `k`, and `origin[k]` its original index.
struct Eliminator {
    rows: Vec<Vec<BigInt>>,
    origin: Vec<usize>,
    prev: BigInt,
    sign: i8,
    divisions: usize,
}

impl Eliminator {
    fn new(m: &IntMatrix) -> Result<Self> {
        let n = m.order()?;
        Ok(Eliminator {
            rows: m.rows().map(<[BigInt]>::to_vec).collect(),
            origin: (0..n).collect(),
            prev: BigInt::one(),
            sign: 1,
            divisions: 0,
        })
    }

    /// Eliminates below position `(k, k)`. Returns the pivot used, or
    /// `None` when column `k` is zero from row `k` down.
    fn step(&mut self, k: usize, pivoting: Pivoting) -> Result<Option<BigInt>> {
        let n = self.rows.len();
        if self.rows[k][k].is_zero() {
            if pivoting == Pivoting::Forbidden {
                return Err(Error::PivotBreakdown { step: k });
            }
            match (k + 1..n).find(|&r| !self.rows[r][k].is_zero()) {
                Some(r) => {
                    self.rows.swap(k, r);
                    self.origin.swap(k, r);
                    self.sign = -self.sign;
                }
                None => return Ok(None),
            }
        }
        let pivot = self.rows[k][k].clone();
        let (upper, lower) = self.rows.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for c in k + 1..n {
                let numerator = &pivot * &row[c] - &factor * &pivot_row[c];
                row[c] = exact_div(&numerator, &self.prev)?;
                self.divisions += 1;
            }
        }
        self.prev = pivot.clone();
        Ok(Some(pivot))
    }

    fn run(mut self, pivoting: Pivoting) -> Result<(BigInt, EliminationTrace)> {
        let n = self.rows.len();
        let mut pivots = Vec::with_capacity(n);
        let mut principal_minors = Vec::with_capacity(n);
        if n == 0 {
            return Ok((BigInt::one(), self.trace(pivots, principal_minors)));
        }
        for k in 0..n - 1 {
            match self.step(k, pivoting)? {
                Some(pivot) => {
                    pivots.push(Pivot { step: k, pivot_row: self.origin[k], pivot_value: pivot.clone() });
                    principal_minors.push(pivot);
                }
                None => {
                    principal_minors.push(BigInt::zero());
                    return Ok((BigInt::zero(), self.trace(pivots, principal_minors)));
                }
            }
        }
        let last = self.rows[n - 1][n - 1].clone();
        if !last.is_zero() {
            pivots.push(Pivot { step: n - 1, pivot_row: self.origin[n - 1], pivot_value: last.clone() });
        }
        principal_minors.push(last.clone());
        let det = if self.sign < 0 { -last } else { last };
        Ok((det, self.trace(pivots, principal_minors)))
    }

    fn trace(&self, pivots: Vec<Pivot>, principal_minors: Vec<BigInt>) -> EliminationTrace {
        EliminationTrace { pivots, sign: self.sign, principal_minors, divisions: self.divisions }
    }
}

/// Exact determinant by fraction-free elimination with first-nonzero row
/// pivoting. Singular input yields `0`, not an error.
pub fn bareiss_det(m: &IntMatrix) -> Result<(BigInt, EliminationTrace)> {
    Eliminator::new(m)?.run(Pivoting::RowSwap)
}

/// Leading principal minors `d_1 … d_n` of `m` itself. Fails with
/// `PivotBreakdown` if a zero leading minor (before the last) would force a
/// row swap.
pub fn bareiss_minors(m: &IntMatrix) -> Result<Vec<BigInt>> {
    let (_, trace) = Eliminator::new(m)?.run(Pivoting::Forbidden)?;
    Ok(trace.principal_minors)
}

/// A snapshot of the working matrix after an elimination step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub step: usize,
    /// `row_order[p]` is the original row now at position `p`.
    pub row_order: Vec<usize>,
    pub working: IntMatrix,
}

/// Snapshots after each completed step. In the snapshot after step `k`,
/// entry `(r, c)` with `r, c > k` equals the determinant of rows
/// `row_order[0..=k]` plus `row_order[r]` and columns `0..=k` plus `c` of
/// the input. Stops early if the matrix turns out singular.
pub fn bareiss_stages(m: &IntMatrix) -> Result<Vec<Stage>> {
    let mut elim = Eliminator::new(m)?;
    let n = elim.rows.len();
    let mut stages = Vec::new();
    for k in 0..n.saturating_sub(1) {
        if elim.step(k, Pivoting::RowSwap)?.is_none() {
            break;
        }
        stages.push(Stage {
            step: k,
            row_order: elim.origin.clone(),
            working: IntMatrix::from_rows(elim.rows.clone())?,
        });
    }
    Ok(stages)
}
