#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use sylvester::{EntryVar, IntMatrix, Matrix, Monomial, MultiPoly, Ring};

/// All permutations of `0..n` paired with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            (p, inversions % 2 == 1)
        })
        .collect()
}

/// Determinant as the signed sum over all permutations.
pub fn leibniz_det<T: Ring>(m: &Matrix<T>) -> T {
    assert!(m.is_square());
    let n = m.n_rows();
    let mut total = T::zero();
    for (perm, odd) in signed_permutations(n) {
        let term = (0..n).fold(T::one(), |acc, r| acc.mul_ref(m.at(r, perm[r])));
        total = if odd { total.sub_ref(&term) } else { total.add_ref(&term) };
    }
    total
}

pub fn var(r: usize, c: usize) -> EntryVar {
    EntryVar::new(r, c).unwrap()
}

pub fn ints(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows).unwrap()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Polynomials over `a[1..=3, 1..=4]` with small exponents and coefficients.
pub fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    let factor = (1usize..=3, 1usize..=4, 0u32..=2).prop_map(|(r, c, e)| (var(r, c), e));
    let term = (prop::collection::vec(factor, 0..4), -5i64..=5)
        .prop_map(|(fs, c)| (Monomial::from_factors(fs), BigInt::from(c)));
    prop::collection::vec(term, 0..6).prop_map(MultiPoly::from_terms)
}

/// Multilinear polynomials in rows 1..=3 and border row 4 of a 3×3 base.
pub fn multilinear_strategy() -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::btree_set((1usize..=4, 1usize..=3), 0..4), -4i64..=4).prop_map(|(vars, c)| {
        (Monomial::from_factors(vars.into_iter().map(|(r, c)| (var(r, c), 1))), BigInt::from(c))
    });
    prop::collection::vec(term, 0..6).prop_map(MultiPoly::from_terms)
}

pub fn int_matrix_strategy(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |xs| {
            IntMatrix::new(n, n, xs.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}
