//! Seeded random trials of the identity on integer matrices.
//!
//! Matrices for dimension `n` are drawn from ChaCha8 seeded with
//! `seed_from_u64(seed)` on stream `n`. Entries are read row-major, one
//! `next_u64` per entry, mapped onto `[-bound, bound]` by rejection
//! sampling: with `span = 2·bound + 1`, draws at or above
//! `span · ⌊2^64 / span⌋` are discarded and the rest map to
//! `draw mod span − bound`. Trial `t` of dimension `n` is therefore the
//! `t`-th matrix drawn from that stream, independent of which other
//! dimensions a campaign covers.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{IndexTuple, SylvesterChecker};
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Campaign {
    pub dims: RangeInclusive<usize>,
    /// Trials per dimension.
    pub trials: usize,
    pub seed: u64,
    pub entry_bound: u64,
    /// Restrict each trial to one tuple instead of all sorted tuples.
    pub indices: Option<IndexTuple>,
}

impl Campaign {
    pub fn new(dims: RangeInclusive<usize>, trials: usize, seed: u64, entry_bound: u64) -> Self {
        Campaign { dims, trials, seed, entry_bound, indices: None }
    }

    pub fn with_indices(mut self, t: IndexTuple) -> Self {
        self.indices = Some(t);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionSummary {
    pub n: usize,
    pub trials_run: usize,
    /// Individual (matrix, tuple) evaluations.
    pub checks: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub trials_run: usize,
    pub checks: usize,
    pub violations: usize,
    pub per_dimension: Vec<DimensionSummary>,
}

struct EntrySampler {
    rng: ChaCha8Rng,
    bound: u64,
    span: u64,
    zone: u64,
}

impl EntrySampler {
    fn new(seed: u64, n: usize, bound: u64) -> Result<Self> {
        if bound == 0 || bound > (u64::MAX - 1) / 2 {
            return Err(Error::InvalidBound);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(n as u64);
        let span = 2 * bound + 1;
        // Largest multiple of span not exceeding 2^64, expressed below 2^64.
        let zone = u64::MAX - (u64::MAX % span + 1) % span;
        Ok(EntrySampler { rng, bound, span, zone })
    }

    fn next_entry(&mut self) -> BigInt {
        loop {
            let draw = self.rng.next_u64();
            if draw <= self.zone {
                return BigInt::from(draw % self.span) - BigInt::from(self.bound);
            }
        }
    }

    fn next_matrix(&mut self, n: usize) -> IntMatrix {
        Matrix::from_fn(n, n, |_, _| self.next_entry())
    }
}

/// Trial `trial` (0-based) of dimension `n` under `seed` and `bound`.
pub fn sample_matrix(seed: u64, n: usize, bound: u64, trial: usize) -> Result<IntMatrix> {
    let mut sampler = EntrySampler::new(seed, n, bound)?;
    for _ in 0..trial {
        sampler.next_matrix(n);
    }
    Ok(sampler.next_matrix(n))
}

pub fn random_numeric_campaign(campaign: &Campaign) -> Result<CampaignSummary> {
    if campaign.dims.start() < &2 {
        return Err(Error::DimensionTooSmall { n: *campaign.dims.start(), min: 2 });
    }
    if let Some(t) = campaign.indices {
        // Every dimension in range must admit the tuple.
        t.validate(*campaign.dims.start())?;
    }
    let mut per_dimension = Vec::new();
    for n in campaign.dims.clone() {
        let mut sampler = EntrySampler::new(campaign.seed, n, campaign.entry_bound)?;
        let mut summary = DimensionSummary { n, trials_run: 0, checks: 0, violations: 0 };
        for _ in 0..campaign.trials {
            let m = sampler.next_matrix(n);
            let mut checker = SylvesterChecker::new(&m)?;
            let reports = match campaign.indices {
                Some(t) => vec![checker.check(t)?],
                None => checker.check_all()?,
            };
            summary.checks += reports.len();
            summary.violations += reports.iter().filter(|r| !r.holds).count();
            summary.trials_run += 1;
        }
        per_dimension.push(summary);
    }
    Ok(CampaignSummary {
        trials_run: per_dimension.iter().map(|d| d.trials_run).sum(),
        checks: per_dimension.iter().map(|d| d.checks).sum(),
        violations: per_dimension.iter().map(|d| d.violations).sum(),
        per_dimension,
    })
}
