//! Sparse multivariate polynomials over the integers in the matrix-entry
//! indeterminates `a[r,c]`.
//!
//! A [`MultiPoly`] is always kept in canonical form: monomials are sorted,
//! no stored coefficient is zero, and the zero polynomial has no terms. Two
//! polynomials are therefore mathematically equal exactly when they compare
//! equal with `==`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring;

/// The indeterminate `a[row,col]`. Indices are 1-based.
///
/// Ordering is row-major: first by row, then by column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryVar {
    row: usize,
    col: usize,
}

impl EntryVar {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(EntryVar { row, col })
    }

    pub fn row(self) -> usize {
        self.row
    }

    pub fn col(self) -> usize {
        self.col
    }
}

impl fmt::Display for EntryVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.row, self.col)
    }
}

/// The polynomial consisting of the single indeterminate `a[row,col]`.
///
/// # Panics
/// If either index is zero.
pub fn a(row: usize, col: usize) -> MultiPoly {
    let var = EntryVar::new(row, col).expect("entry indices are 1-based");
    MultiPoly::var(var)
}

/// A power product of indeterminates, factors strictly increasing by
/// variable and every exponent positive. The empty product is `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(EntryVar, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: EntryVar) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary factors, merging repeats and
    /// dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (EntryVar, u32)>) -> Self {
        let mut merged: BTreeMap<EntryVar, u32> = BTreeMap::new();
        for (v, e) in factors {
            *merged.entry(v).or_insert(0) += e;
        }
        Monomial {
            factors: merged.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(EntryVar, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: EntryVar) -> u32 {
        self.factors
            .binary_search_by(|&(w, _)| w.cmp(&v))
            .map(|idx| self.factors[idx].1)
            .unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = EntryVar> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (u, eu) = self.factors[i];
            let (w, ew) = other.factors[j];
            match u.cmp(&w) {
                std::cmp::Ordering::Less => {
                    out.push((u, eu));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((w, ew));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((u, eu + ew));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Returns `(e, m / v)` where `e` is the exponent of `v` in `m`, or
    /// `None` when `v` does not occur.
    fn differentiate(&self, v: EntryVar) -> Option<(u32, Monomial)> {
        let idx = self.factors.binary_search_by(|&(w, _)| w.cmp(&v)).ok()?;
        let e = self.factors[idx].1;
        let mut factors = self.factors.clone();
        if e == 1 {
            factors.remove(idx);
        } else {
            factors[idx].1 = e - 1;
        }
        Some((e, Monomial { factors }))
    }

    /// Splits into the part made of variables satisfying `pred` and the rest.
    pub fn split(&self, pred: impl Fn(EntryVar) -> bool) -> (Monomial, Monomial) {
        let (selected, rest): (Vec<_>, Vec<_>) =
            self.factors.iter().partition(|&&(v, _)| pred(v));
        (Monomial { factors: selected }, Monomial { factors: rest })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in ℤ[a[r,c]], canonical by construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn var(v: EntryVar) -> Self {
        MultiPoly::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Sums the given terms, combining like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in terms {
            out.accumulate(m, c);
        }
        out
    }

    fn accumulate(&mut self, m: Monomial, c: BigInt) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value if the polynomial is constant (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The variable if the polynomial is exactly `1 * v`.
    pub fn as_single_var(&self) -> Option<EntryVar> {
        let mut iter = self.terms.iter();
        let (m, c) = iter.next()?;
        if iter.next().is_some() || !c.is_one() {
            return None;
        }
        match m.factors() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    }

    /// Distinct variables occurring anywhere, in ascending order.
    pub fn variables(&self) -> Vec<EntryVar> {
        let mut vars: Vec<EntryVar> = self.terms.keys().flat_map(|m| m.variables()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`, or returns `None` if any division
    /// leaves a remainder (or `k` is zero).
    pub fn div_exact(&self, k: &BigInt) -> Option<MultiPoly> {
        if k.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(MultiPoly { terms })
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: EntryVar) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if let Some((e, reduced)) = m.differentiate(v) {
                out.accumulate(reduced, c * BigInt::from(e));
            }
        }
        out
    }

    /// Evaluates by substitution. Every variable of `self` must be bound.
    pub fn eval(&self, assignment: &BTreeMap<EntryVar, BigInt>) -> Result<BigInt> {
        self.eval_with(|v| assignment.get(&v).cloned())
    }

    pub fn eval_with(&self, value_of: impl Fn(EntryVar) -> Option<BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.factors() {
                let x = value_of(v).ok_or(Error::UnboundVariable(v))?;
                term *= num_traits::pow(x, e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Groups terms by the part of each monomial made of variables that
    /// satisfy `pred`. Each value is the cofactor polynomial in the
    /// remaining variables; summing `key * value` reproduces `self`.
    pub fn collect_by(&self, pred: impl Fn(EntryVar) -> bool) -> BTreeMap<Monomial, MultiPoly> {
        let mut groups: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest) = m.split(&pred);
            groups.entry(key).or_default().accumulate(rest, c.clone());
        }
        groups.retain(|_, p| !p.is_zero());
        groups
    }

    fn combine(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate_other { -c } else { c.clone() };
            out.accumulate(m.clone(), c);
        }
        out
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.accumulate(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl From<EntryVar> for MultiPoly {
    fn from(v: EntryVar) -> Self {
        MultiPoly::var(v)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(c: BigInt) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl ring::Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn one() -> Self {
        MultiPoly::one()
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.product(other)
    }

    fn neg_ref(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn term_count(&self) -> usize {
        self.len()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                ring::Ring::$impl_fn(self, rhs)
            }
        }

        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                ring::Ring::$impl_fn(&self, &rhs)
            }
        }

        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                ring::Ring::$impl_fn(&self, rhs)
            }
        }

        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                ring::Ring::$impl_fn(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        ring::Ring::neg_ref(&self)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        ring::Ring::neg_ref(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(r: usize, c: usize) -> EntryVar {
        EntryVar::new(r, c).unwrap()
    }

    fn det2() -> MultiPoly {
        a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)
    }

    #[test]
    fn entry_var_rejects_zero_index() {
        assert!(EntryVar::new(0, 1).is_err());
        assert!(EntryVar::new(1, 0).is_err());
        assert!(v(1, 2) < v(2, 1));
        assert!(v(2, 1) < v(2, 3));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = a(1, 1);
        let sum = &x + &(-&x);
        assert!(sum.is_zero());
        assert_eq!(sum, MultiPoly::zero());
        assert_eq!(sum.to_string(), "0");
    }

    #[test]
    fn multiplication_distributes() {
        let lhs = (a(1, 1) + a(1, 2)) * a(2, 1);
        let rhs = a(1, 1) * a(2, 1) + a(1, 2) * a(2, 1);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let p = det2();
        assert_eq!(&p * &MultiPoly::one(), p);
        assert_eq!(p.scale(&BigInt::one()), p);
        assert!(p.scale(&BigInt::zero()).is_zero());
    }

    #[test]
    fn renders_deterministically() {
        assert_eq!(det2().to_string(), "a[1,1]*a[2,2] - a[1,2]*a[2,1]");
        let p = a(1, 1) * a(1, 1) * MultiPoly::constant(3) - MultiPoly::constant(5) - a(2, 1);
        assert_eq!(p.to_string(), "-5 + 3*a[1,1]^2 - a[2,1]");
        assert_eq!((-det2()).to_string(), "-a[1,1]*a[2,2] + a[1,2]*a[2,1]");
    }

    #[test]
    fn derivative_of_2x2_determinant() {
        assert_eq!(det2().partial_derivative(v(1, 1)), a(2, 2));
        assert_eq!(det2().partial_derivative(v(1, 2)), -a(2, 1));
    }

    #[test]
    fn derivative_power_rule() {
        let sq = a(1, 1) * a(1, 1);
        assert_eq!(sq.partial_derivative(v(1, 1)), a(1, 1).scale(&BigInt::from(2)));
    }

    #[test]
    fn derivative_of_absent_variable_is_zero() {
        assert!(a(2, 2).partial_derivative(v(1, 1)).is_zero());
        assert!(MultiPoly::constant(7).partial_derivative(v(1, 1)).is_zero());
    }

    #[test]
    fn eval_2x2_determinant() {
        let assignment: BTreeMap<_, _> = [
            (v(1, 1), BigInt::from(1)),
            (v(1, 2), BigInt::from(2)),
            (v(2, 1), BigInt::from(3)),
            (v(2, 2), BigInt::from(4)),
        ]
        .into_iter()
        .collect();
        assert_eq!(det2().eval(&assignment).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn eval_trivial_cases() {
        assert_eq!(MultiPoly::zero().eval(&BTreeMap::new()).unwrap(), BigInt::zero());
        let assignment = [(v(1, 1), BigInt::from(7))].into_iter().collect();
        assert_eq!(a(1, 1).eval(&assignment).unwrap(), BigInt::from(7));
    }

    #[test]
    fn eval_reports_unbound_variable() {
        let assignment = [(v(1, 1), BigInt::from(7))].into_iter().collect();
        assert_eq!(det2().eval(&assignment), Err(Error::UnboundVariable(v(2, 2))));
    }

    #[test]
    fn single_var_and_constant_views() {
        assert_eq!(a(2, 3).as_single_var(), Some(v(2, 3)));
        assert_eq!(a(2, 3).scale(&BigInt::from(2)).as_single_var(), None);
        assert_eq!((a(1, 1) * a(1, 1)).as_single_var(), None);
        assert_eq!(MultiPoly::constant(4).as_constant(), Some(BigInt::from(4)));
        assert_eq!(MultiPoly::zero().as_constant(), Some(BigInt::zero()));
        assert_eq!(a(1, 1).as_constant(), None);
    }

    #[test]
    fn collect_by_partitions_terms() {
        let p = a(1, 3) * a(2, 1) + a(1, 3) * a(2, 2) - a(3, 3) * a(1, 1) + MultiPoly::constant(2);
        let groups = p.collect_by(|w| w.col() == 3);
        assert_eq!(groups.len(), 3);
        assert_eq!(groups[&Monomial::var(v(1, 3))], a(2, 1) + a(2, 2));
        assert_eq!(groups[&Monomial::var(v(3, 3))], -a(1, 1));
        assert_eq!(groups[&Monomial::one()], MultiPoly::constant(2));
        let rebuilt = groups
            .iter()
            .fold(MultiPoly::zero(), |acc, (k, q)| acc + MultiPoly::term(1, k.clone()) * q);
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn div_exact_detects_remainder() {
        let p = a(1, 1).scale(&BigInt::from(4)) + MultiPoly::constant(2);
        assert_eq!(p.div_exact(&BigInt::from(2)), Some(a(1, 1).scale(&BigInt::from(2)) + MultiPoly::one()));
        assert_eq!(p.div_exact(&BigInt::from(4)), None);
        assert_eq!(p.div_exact(&BigInt::zero()), None);
    }

    #[test]
    fn monomial_from_factors_merges() {
        let m = Monomial::from_factors([(v(2, 2), 1), (v(1, 1), 2), (v(2, 2), 1), (v(3, 1), 0)]);
        assert_eq!(m.factors(), &[(v(1, 1), 2), (v(2, 2), 2)]);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.degree_in(v(2, 2)), 2);
        assert_eq!(m.degree_in(v(3, 1)), 0);
    }
}
