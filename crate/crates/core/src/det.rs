//! Determinants by memoized Laplace expansion, cofactors computed both from
//! minors and as partial derivatives, and the row-replacing differential
//! operators `D^(i)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, MinorSpec, SymMatrix};
use crate::poly::{EntryVar, MultiPoly};
use crate::ring::Ring;

/// Largest order the subset memo can index.
pub const MAX_EXPANSION_ORDER: usize = 64;

/// Determinants of square submatrices of one matrix, memoized on the
/// (row set, column set) pair.
///
/// Each submatrix is expanded along its lowest remaining row, so every
/// minor reached during one expansion is shared with every other query
/// against the same matrix. This is what makes the Sylvester checks cheap:
/// the full determinant and all its one- and two-deleted minors draw on a
/// single table.
pub struct MinorDeterminants<'a, T> {
    matrix: &'a Matrix<T>,
    memo: HashMap<(u64, u64), T>,
}

impl<'a, T: Ring> MinorDeterminants<'a, T> {
    pub fn new(matrix: &'a Matrix<T>) -> Result<Self> {
        let n = matrix.order()?;
        if n > MAX_EXPANSION_ORDER {
            return Err(Error::DimensionTooLarge { n, max: MAX_EXPANSION_ORDER });
        }
        Ok(MinorDeterminants { matrix, memo: HashMap::new() })
    }

    fn full_mask(&self) -> u64 {
        let n = self.matrix.n_rows();
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn full(&mut self) -> T {
        let mask = self.full_mask();
        self.expand(mask, mask)
    }

    /// Determinant of the minor obtained by deleting `spec`'s rows and
    /// columns (original 1-based indices).
    pub fn minor(&mut self, spec: &MinorSpec) -> Result<T> {
        let n = self.matrix.n_rows();
        let mut rows = self.full_mask();
        let mut cols = rows;
        for &r in spec.rows() {
            if r > n {
                return Err(Error::IndexOutOfRange { index: r, bound: n });
            }
            rows &= !(1 << (r - 1));
        }
        for &c in spec.cols() {
            if c > n {
                return Err(Error::IndexOutOfRange { index: c, bound: n });
            }
            cols &= !(1 << (c - 1));
        }
        Ok(self.expand(rows, cols))
    }

    fn expand(&mut self, rows: u64, cols: u64) -> T {
        if rows == 0 {
            return T::one();
        }
        if let Some(hit) = self.memo.get(&(rows, cols)) {
            return hit.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest_rows = rows & (rows - 1);
        let mut acc = T::zero();
        let mut remaining = cols;
        let mut position = 0usize;
        while remaining != 0 {
            let c = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            let entry = self.matrix.at(r, c);
            if !entry.is_zero() {
                let sub = self.expand(rest_rows, cols & !(1 << c));
                let term = entry.mul_ref(&sub);
                acc = if position % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            position += 1;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

/// Exact determinant. The 0×0 matrix has determinant 1.
pub fn det<T: Ring>(m: &Matrix<T>) -> Result<T> {
    Ok(MinorDeterminants::new(m)?.full())
}

/// `(-1)^(i+j) · det(m with row i and column j deleted)`, 1-based.
pub fn cofactor<T: Ring>(m: &Matrix<T>, i: usize, j: usize) -> Result<T> {
    let n = m.order()?;
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, bound: n });
        }
    }
    let minor_det = det(&m.minor(&MinorSpec::single(i, j)?)?)?;
    Ok(if (i + j) % 2 == 0 { minor_det } else { minor_det.neg_ref() })
}

/// The cofactor of entry `(i, j)` computed as `∂ det(m) / ∂ m[i,j]`.
///
/// Only meaningful when the entries are independent indeterminates, so `m`
/// must be generic (distinct single variables).
pub fn cofactor_via_derivative(m: &SymMatrix, i: usize, j: usize) -> Result<MultiPoly> {
    let n = m.order()?;
    if !m.is_generic() {
        return Err(Error::NotGeneric);
    }
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, bound: n });
        }
    }
    let v = m.at(i - 1, j - 1).as_single_var().ok_or(Error::NotGeneric)?;
    Ok(det(m)?.partial_derivative(v))
}

/// The operator `D^(i) = Σ_j a[n+1,j] · ∂/∂a[i,j]` for an `n`×`n` base
/// matrix. Applied to `det A` it yields the determinant of `A` with row `i`
/// replaced by the border row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DOperator {
    row: usize,
    n: usize,
}

impl DOperator {
    pub fn new(row: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        if row == 0 || row > n {
            return Err(Error::IndexOutOfRange { index: row, bound: n });
        }
        Ok(DOperator { row, n })
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Variables absent from `p` contribute nothing, so applying the
    /// operator to a minor's determinant silently skips deleted entries.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for j in 1..=self.n {
            let target = entry(self.row, j);
            let d = p.partial_derivative(target);
            if !d.is_zero() {
                out = out + MultiPoly::var(entry(self.n + 1, j)) * d;
            }
        }
        out
    }
}

fn entry(row: usize, col: usize) -> EntryVar {
    EntryVar::new(row, col).expect("1-based by construction")
}

/// Expands the determinant of the bordered matrix along its new last
/// column, given the determinant of the base `n`×`n` matrix (or of one of
/// its minors):
///
/// `a[n+1,n+1]·base − Σ_i a[i,n+1] · D^(i) base`.
pub fn border_expansion(n: usize, base_det: &MultiPoly) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidDimension(n));
    }
    let mut out = MultiPoly::var(entry(n + 1, n + 1)) * base_det;
    for i in 1..=n {
        let replaced = DOperator::new(i, n)?.apply(base_det);
        if !replaced.is_zero() {
            out = out - MultiPoly::var(entry(i, n + 1)) * replaced;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::matrix::{extend, generic_matrix, replace_row_with_border, IntMatrix};
    use crate::poly::a;

    fn sample() -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).unwrap()
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(det(&SymMatrix::zeros(0, 0)).unwrap(), MultiPoly::one());
        assert_eq!(det(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn one_by_one_is_its_entry() {
        assert_eq!(det(&generic_matrix(1).unwrap()).unwrap(), a(1, 1));
    }

    #[test]
    fn generic_2x2() {
        assert_eq!(det(&generic_matrix(2).unwrap()).unwrap(), a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
    }

    #[test]
    fn integer_3x3() {
        assert_eq!(det(&sample()).unwrap(), BigInt::from(-3));
        assert_eq!(det(&sample().to_symbolic()).unwrap(), MultiPoly::constant(-3));
    }

    #[test]
    fn not_square_is_rejected() {
        assert_eq!(det(&IntMatrix::zeros(2, 3)), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn cofactor_examples() {
        let g2 = generic_matrix(2).unwrap();
        assert_eq!(cofactor(&g2, 1, 1).unwrap(), a(2, 2));
        assert_eq!(cofactor(&g2, 1, 2).unwrap(), -a(2, 1));
        assert_eq!(cofactor(&sample(), 2, 1).unwrap(), BigInt::from(4));
        assert_eq!(cofactor(&g2, 3, 1), Err(Error::IndexOutOfRange { index: 3, bound: 2 }));
        assert_eq!(cofactor(&g2, 1, 0), Err(Error::IndexOutOfRange { index: 0, bound: 2 }));
    }

    #[test]
    fn derivative_cofactor_examples() {
        let g2 = generic_matrix(2).unwrap();
        assert_eq!(cofactor_via_derivative(&g2, 1, 1).unwrap(), a(2, 2));
        let g3 = generic_matrix(3).unwrap();
        let expected = a(1, 1) * a(3, 3) - a(1, 3) * a(3, 1);
        assert_eq!(cofactor_via_derivative(&g3, 2, 2).unwrap(), expected);
        assert_eq!(cofactor(&g3, 2, 2).unwrap(), expected);
        assert_eq!(cofactor_via_derivative(&sample().to_symbolic(), 1, 1), Err(Error::NotGeneric));
    }

    #[test]
    fn derivative_cofactor_is_free_of_its_row_and_column() {
        let g3 = generic_matrix(3).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let c = cofactor_via_derivative(&g3, i, j).unwrap();
                assert!(c.variables().iter().all(|v| v.row() != i && v.col() != j));
            }
        }
    }

    #[test]
    fn operator_replaces_a_row() {
        let g2 = generic_matrix(2).unwrap();
        let d = det(&g2).unwrap();
        let replaced = DOperator::new(1, 2).unwrap().apply(&d);
        assert_eq!(replaced, a(3, 1) * a(2, 2) - a(3, 2) * a(2, 1));
        assert_eq!(replaced, det(&replace_row_with_border(&g2, 1).unwrap()).unwrap());
    }

    #[test]
    fn operator_twice_annihilates() {
        let d = det(&generic_matrix(2).unwrap()).unwrap();
        let once = DOperator::new(1, 2).unwrap().apply(&d);
        assert!(DOperator::new(2, 2).unwrap().apply(&once).is_zero());
        assert!(DOperator::new(1, 2).unwrap().apply(&once).is_zero());
    }

    #[test]
    fn operator_skips_deleted_row() {
        let g3 = generic_matrix(3).unwrap();
        let m = det(&g3.minor(&MinorSpec::single(1, 1).unwrap()).unwrap()).unwrap();
        assert!(DOperator::new(1, 3).unwrap().apply(&m).is_zero());
    }

    #[test]
    fn operator_validation() {
        assert!(DOperator::new(0, 2).is_err());
        assert!(DOperator::new(3, 2).is_err());
        assert!(DOperator::new(1, 0).is_err());
    }

    #[test]
    fn border_expansion_builds_larger_determinant() {
        for n in 1..=3 {
            let g = generic_matrix(n).unwrap();
            let expanded = border_expansion(n, &det(&g).unwrap()).unwrap();
            assert_eq!(expanded, det(&extend(&g).unwrap()).unwrap(), "n = {n}");
        }
        assert_eq!(
            border_expansion(1, &a(1, 1)).unwrap(),
            a(2, 2) * a(1, 1) - a(1, 2) * a(2, 1)
        );
    }

    #[test]
    fn border_expansion_of_minor() {
        for n in 2..=3 {
            let g = generic_matrix(n).unwrap();
            let spec = MinorSpec::single(1, 1).unwrap();
            let base = det(&g.minor(&spec).unwrap()).unwrap();
            let direct = det(&extend(&g).unwrap().minor(&spec).unwrap()).unwrap();
            assert_eq!(border_expansion(n, &base).unwrap(), direct);
        }
    }

    #[test]
    fn minor_table_matches_direct_minors() {
        let m = IntMatrix::from_i64_rows(&[&[2, -1, 0, 3], &[1, 4, -2, 5], &[0, 7, 1, -3], &[6, 2, 2, 1]])
            .unwrap();
        let mut table = MinorDeterminants::new(&m).unwrap();
        assert_eq!(table.full(), det(&m).unwrap());
        for i in 1..=4 {
            for k in 1..=4 {
                let spec = MinorSpec::single(i, k).unwrap();
                assert_eq!(table.minor(&spec).unwrap(), det(&m.minor(&spec).unwrap()).unwrap());
            }
        }
        let spec = MinorSpec::double(2, 4, 1, 3).unwrap();
        assert_eq!(table.minor(&spec).unwrap(), det(&m.minor(&spec).unwrap()).unwrap());
        assert!(table.minor(&MinorSpec::single(5, 1).unwrap()).is_err());
    }
}
