//! Checks of Sylvester's determinant identity
//!
//! `det A · det A[i,j|k,l] = det A[i|k] · det A[j|l] − det A[i|l] · det A[j|k]`
//!
//! for sorted index pairs `i < j`, `k < l`, either as a polynomial identity
//! over a symbolic matrix or as an integer equality over a concrete one.

mod campaign;
mod dodgson;
mod replay;

use std::fmt::Display;

use serde_json::{json, Value};

pub use campaign::{random_numeric_campaign, sample_matrix, Campaign, CampaignSummary, DimensionSummary};
pub use dodgson::dodgson_condensation;
pub use replay::{replay_induction_step, GroupKind, InductionReport, TermGroup, MAX_REPLAY_ORDER};

use crate::det::MinorDeterminants;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, MinorSpec};
use crate::ring::Ring;

/// Row pair `(i, j)` and column pair `(k, l)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl IndexTuple {
    pub const CANONICAL: IndexTuple = IndexTuple { i: 1, j: 2, k: 1, l: 2 };

    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Self {
        IndexTuple { i, j, k, l }
    }

    /// Checks the tuple against an `n`×`n` matrix.
    pub fn validate(&self, n: usize) -> Result<()> {
        for idx in [self.i, self.j, self.k, self.l] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, bound: n });
            }
        }
        for (lo, hi) in [(self.i, self.j), (self.k, self.l)] {
            if lo == hi {
                return Err(Error::InvalidIndexPair(lo, hi));
            }
            if lo > hi {
                return Err(Error::UnsortedIndices(lo, hi));
            }
        }
        Ok(())
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.i, self.j, self.k, self.l]
    }
}

/// Every sorted tuple for an `n`×`n` matrix, in lexicographic order.
pub fn index_tuples(n: usize) -> Vec<IndexTuple> {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    pairs
        .iter()
        .flat_map(|&(i, j)| pairs.iter().map(move |&(k, l)| IndexTuple { i, j, k, l }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport<T> {
    pub n: usize,
    pub indices: IndexTuple,
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
    pub holds: bool,
}

impl<T: Ring + Display> IdentityReport<T> {
    /// `{"identity": "sylvester", "n": .., "indices": [i, j, k, l],
    /// "holds": .., "residual_terms": ..}`, optionally with the rendered
    /// sides.
    pub fn to_json(&self, include_sides: bool) -> Value {
        let mut out = json!({
            "identity": "sylvester",
            "n": self.n,
            "indices": self.indices.as_array(),
            "holds": self.holds,
            "residual_terms": self.residual.term_count(),
        });
        if include_sides {
            out["lhs"] = Value::String(self.lhs.to_string());
            out["rhs"] = Value::String(self.rhs.to_string());
        }
        out
    }
}

/// Evaluates the identity for many index tuples of one matrix, sharing
/// every minor determinant between them.
pub struct SylvesterChecker<'a, T> {
    n: usize,
    minors: MinorDeterminants<'a, T>,
    full: Option<T>,
}

impl<'a, T: Ring> SylvesterChecker<'a, T> {
    pub fn new(m: &'a Matrix<T>) -> Result<Self> {
        let n = m.order()?;
        if n < 2 {
            return Err(Error::DimensionTooSmall { n, min: 2 });
        }
        Ok(SylvesterChecker { n, minors: MinorDeterminants::new(m)?, full: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check(&mut self, t: IndexTuple) -> Result<IdentityReport<T>> {
        t.validate(self.n)?;
        let full = match &self.full {
            Some(d) => d.clone(),
            None => {
                let d = self.minors.full();
                self.full = Some(d.clone());
                d
            }
        };
        let inner = self.minors.minor(&MinorSpec::double(t.i, t.j, t.k, t.l)?)?;
        let ik = self.minors.minor(&MinorSpec::single(t.i, t.k)?)?;
        let jl = self.minors.minor(&MinorSpec::single(t.j, t.l)?)?;
        let il = self.minors.minor(&MinorSpec::single(t.i, t.l)?)?;
        let jk = self.minors.minor(&MinorSpec::single(t.j, t.k)?)?;

        let lhs = full.mul_ref(&inner);
        let rhs = ik.mul_ref(&jl).sub_ref(&il.mul_ref(&jk));
        let residual = lhs.sub_ref(&rhs);
        let holds = residual.is_zero();
        Ok(IdentityReport { n: self.n, indices: t, lhs, rhs, residual, holds })
    }

    /// Checks every sorted tuple.
    pub fn check_all(&mut self) -> Result<Vec<IdentityReport<T>>> {
        index_tuples(self.n).into_iter().map(|t| self.check(t)).collect()
    }
}

/// The identity at rows `i < j` and columns `k < l` (1-based).
pub fn check_general<T: Ring>(m: &Matrix<T>, i: usize, j: usize, k: usize, l: usize) -> Result<IdentityReport<T>> {
    SylvesterChecker::new(m)?.check(IndexTuple::new(i, j, k, l))
}

/// The identity at the leading corner `(1, 2 | 1, 2)`.
pub fn check_canonical<T: Ring>(m: &Matrix<T>) -> Result<IdentityReport<T>> {
    SylvesterChecker::new(m)?.check(IndexTuple::CANONICAL)
}
