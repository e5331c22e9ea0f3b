//! Mechanical replay of the induction step from `n` to `n + 1`.
//!
//! Each of the five determinants in the identity for the bordered matrix
//! `A⁺` is written as a border expansion of the corresponding determinant
//! of `A`:
//!
//! `det M⁺ = c·det M − Σ_i b_i · D^(i) det M`, with `c = a[n+1,n+1]` and
//! `b_i = a[i,n+1]`.
//!
//! Multiplying out, both sides are quadratic forms in the border-column
//! variables `c, b_1 … b_n`. Terms are collected by their border monomial:
//!
//! * `c²` — the identity for `A` itself;
//! * `b_i·b_j` (`i ≤ j`) — `D^(i) D^(j)` applied to the identity for `A`
//!   (halved when `i = j`);
//! * `c·b_i` — `−D^(i)` applied to the identity for `A`.
//!
//! For every group the report holds the collected coefficient of each side,
//! the operator-derived prediction for each side, and their residual.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::det::{border_expansion, det, DOperator};
use crate::error::{Error, Result};
use crate::matrix::{generic_matrix, MinorSpec};
use crate::poly::{EntryVar, Monomial, MultiPoly};

/// Largest base dimension the replay accepts.
pub const MAX_REPLAY_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// Terms proportional to `a[n+1,n+1]²`.
    CornerSquared,
    /// Terms proportional to `a[i,n+1]·a[j,n+1]`, `i ≤ j`.
    Cross(usize, usize),
    /// Terms proportional to `a[n+1,n+1]·a[i,n+1]`.
    Mixed(usize),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::CornerSquared => f.write_str("corner_sq"),
            GroupKind::Cross(i, j) => write!(f, "cross({i},{j})"),
            GroupKind::Mixed(i) => write!(f, "mixed({i})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermGroup {
    pub kind: GroupKind,
    /// Coefficient of the group's border monomial on the left side.
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    /// The same coefficients derived by applying operators to the two
    /// sides of the identity for the base matrix.
    pub predicted_lhs: MultiPoly,
    pub predicted_rhs: MultiPoly,
    pub residual: MultiPoly,
}

impl TermGroup {
    pub fn vanishes(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn matches_prediction(&self) -> bool {
        self.lhs == self.predicted_lhs && self.rhs == self.predicted_rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionReport {
    pub n: usize,
    /// Residual of the identity for the base matrix (the hypothesis).
    pub base_residual: MultiPoly,
    /// Empty for `n = 1`, where the base matrix has no second row.
    pub groups: Vec<TermGroup>,
    /// Residual terms whose border monomial belongs to no group.
    pub unexpected: MultiPoly,
    /// Residual of the identity for the bordered matrix.
    pub total_residual: MultiPoly,
}

impl InductionReport {
    pub fn all_vanish(&self) -> bool {
        self.base_residual.is_zero()
            && self.unexpected.is_zero()
            && self.total_residual.is_zero()
            && self.groups.iter().all(|g| g.vanishes() && g.matches_prediction())
    }

    pub fn to_json(&self) -> Value {
        let groups: Vec<Value> = self
            .groups
            .iter()
            .map(|g| {
                json!({
                    "group": g.kind.to_string(),
                    "lhs_terms": g.lhs.len(),
                    "rhs_terms": g.rhs.len(),
                    "residual_terms": g.residual.len(),
                    "matches_operator_prediction": g.matches_prediction(),
                    "vanishes": g.vanishes(),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "base_residual_terms": self.base_residual.len(),
            "groups": groups,
            "unexpected_terms": self.unexpected.len(),
            "total_residual_terms": self.total_residual.len(),
            "holds": self.all_vanish(),
        })
    }
}

fn var(row: usize, col: usize) -> EntryVar {
    EntryVar::new(row, col).expect("1-based by construction")
}

/// The five determinants of the identity at `(1, 2 | 1, 2)`.
struct Sides {
    full: MultiPoly,
    inner: MultiPoly,
    d11: MultiPoly,
    d22: MultiPoly,
    d12: MultiPoly,
    d21: MultiPoly,
}

impl Sides {
    fn lhs(&self) -> MultiPoly {
        &self.full * &self.inner
    }

    fn rhs(&self) -> MultiPoly {
        &self.d11 * &self.d22 - &self.d12 * &self.d21
    }

    fn try_map(&self, f: impl Fn(&MultiPoly) -> Result<MultiPoly>) -> Result<Sides> {
        Ok(Sides {
            full: f(&self.full)?,
            inner: f(&self.inner)?,
            d11: f(&self.d11)?,
            d22: f(&self.d22)?,
            d12: f(&self.d12)?,
            d21: f(&self.d21)?,
        })
    }
}

fn base_sides(n: usize) -> Result<Sides> {
    let g = generic_matrix(n)?;
    let minor_det = |spec: MinorSpec| -> Result<MultiPoly> { det(&g.minor(&spec)?) };
    Ok(Sides {
        full: det(&g)?,
        inner: minor_det(MinorSpec::double(1, 2, 1, 2)?)?,
        d11: minor_det(MinorSpec::single(1, 1)?)?,
        d22: minor_det(MinorSpec::single(2, 2)?)?,
        d12: minor_det(MinorSpec::single(1, 2)?)?,
        d21: minor_det(MinorSpec::single(2, 1)?)?,
    })
}

/// Replays the induction step for a generic `n`×`n` base matrix,
/// `1 ≤ n ≤ 4`.
pub fn replay_induction_step(n: usize) -> Result<InductionReport> {
    if n == 0 {
        return Err(Error::InvalidDimension(n));
    }
    if n > MAX_REPLAY_ORDER {
        return Err(Error::DimensionTooLarge { n, max: MAX_REPLAY_ORDER });
    }
    if n == 1 {
        // The bordered matrix is the generic 2×2 and the base has no second
        // row to delete, so there is nothing to group.
        let report = super::check_canonical(&generic_matrix(2)?)?;
        return Ok(InductionReport {
            n,
            base_residual: MultiPoly::zero(),
            groups: Vec::new(),
            unexpected: MultiPoly::zero(),
            total_residual: report.residual,
        });
    }

    let base = base_sides(n)?;
    let bordered = base.try_map(|p| border_expansion(n, p))?;
    let lhs = bordered.lhs();
    let rhs = bordered.rhs();
    let total_residual = &lhs - &rhs;

    let in_border_column = |v: EntryVar| v.col() == n + 1;
    let mut lhs_groups = lhs.collect_by(in_border_column);
    let mut rhs_groups = rhs.collect_by(in_border_column);

    let base_lhs = base.lhs();
    let base_rhs = base.rhs();
    let ops: Vec<DOperator> = (1..=n).map(|i| DOperator::new(i, n)).collect::<Result<_>>()?;
    let corner = var(n + 1, n + 1);

    let mut kinds = vec![(GroupKind::CornerSquared, Monomial::from_factors([(corner, 2)]))];
    for i in 1..=n {
        for j in i..=n {
            let key = Monomial::from_factors([(var(i, n + 1), 1), (var(j, n + 1), 1)]);
            kinds.push((GroupKind::Cross(i, j), key));
        }
    }
    for i in 1..=n {
        kinds.push((GroupKind::Mixed(i), Monomial::from_factors([(corner, 1), (var(i, n + 1), 1)])));
    }

    let predict = |kind: GroupKind, side: &MultiPoly| -> Result<MultiPoly> {
        match kind {
            GroupKind::CornerSquared => Ok(side.clone()),
            GroupKind::Mixed(i) => Ok(-ops[i - 1].apply(side)),
            GroupKind::Cross(i, j) => {
                let twice = ops[i - 1].apply(&ops[j - 1].apply(side));
                if i != j {
                    return Ok(twice);
                }
                let two = BigInt::from(2);
                twice.div_exact(&two).ok_or_else(|| Error::InexactDivision {
                    numerator: twice.to_string(),
                    divisor: two.to_string(),
                })
            }
        }
    };

    let mut groups = Vec::with_capacity(kinds.len());
    for (kind, key) in kinds {
        let lhs = lhs_groups.remove(&key).unwrap_or_default();
        let rhs = rhs_groups.remove(&key).unwrap_or_default();
        let residual = &lhs - &rhs;
        groups.push(TermGroup {
            kind,
            predicted_lhs: predict(kind, &base_lhs)?,
            predicted_rhs: predict(kind, &base_rhs)?,
            lhs,
            rhs,
            residual,
        });
    }

    let leftover = |rest: BTreeMap<Monomial, MultiPoly>| {
        rest.into_iter()
            .fold(MultiPoly::zero(), |acc, (key, coeff)| acc + MultiPoly::term(1, key) * coeff)
    };
    let unexpected = leftover(lhs_groups) - leftover(rhs_groups);

    Ok(InductionReport {
        n,
        base_residual: &base_lhs - &base_rhs,
        groups,
        unexpected,
        total_residual,
    })
}
