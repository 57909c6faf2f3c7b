//! Code parameters: dimension, logical operators, exact and estimated distance.

mod estimate;
mod exact;
mod logical;

use serde::Serialize;

pub use estimate::{distance_estimate, DistanceEstimate, ESTIMATOR_NAME};
pub use exact::{distance_exact, ExactDistance, ExactMethod, DEFAULT_BUDGET};
pub use logical::{logical_basis, PauliType};

use crate::construct::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

/// `n - rank(hx) - rank(hz)`.
pub fn compute_k(code: &CssCode) -> usize {
    code.n() - code.hx.rank() - code.hz.rank()
}

/// Precomputed data for one logical type: a basis of the commuting-check
/// kernel and the opposite-type logicals.
///
/// For `v` in `ker hx`, `v` is in `rowspace hz` exactly when it commutes
/// with every X logical, so a nonzero detector signature marks a
/// nontrivial Z logical (and symmetrically for X).
pub(crate) struct SideData {
    pub n: usize,
    pub kernel: Vec<BitVec>,
    pub detectors: BitMatrix,
}

impl SideData {
    pub fn new(code: &CssCode, kind: PauliType) -> Self {
        let n = code.n();
        let (checks, _) = kind.matrices(code);
        let detectors = BitMatrix::from_bitvecs(n, &logical_basis(code, kind.other()))
            .expect("logical vectors have length n");
        Self {
            n,
            kernel: checks.kernel_basis(),
            detectors,
        }
    }

    /// Overlap parities of `v` with each detector, packed.
    pub fn signature(&self, v: &[u64]) -> Vec<u64> {
        let mut sig = BitVec::zeros(self.detectors.rows());
        for r in 0..self.detectors.rows() {
            if odd_overlap(self.detectors.row_words(r), v) {
                sig.set(r, true);
            }
        }
        sig.words().to_vec()
    }

    pub fn is_nontrivial(&self, v: &[u64]) -> bool {
        (0..self.detectors.rows()).any(|r| odd_overlap(self.detectors.row_words(r), v))
    }
}

fn odd_overlap(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones())
        .sum::<u32>()
        % 2
        == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Exact,
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EstimatorInfo {
    pub method: String,
    pub trials: usize,
    pub seed: u64,
}

/// `[[n, k, d]]` with provenance for `d`.
///
/// `d`, `d_x` and `d_z` are `None` when `k = 0`. With an exact result a side
/// may also be `None` when it was only shown to be at least `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeMetrics {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_kind: Option<DistanceKind>,
    pub d_x: Option<usize>,
    pub d_z: Option<usize>,
    pub estimator: Option<EstimatorInfo>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricsOptions {
    /// Candidate budget for the exact search; `0` skips it.
    pub budget: u64,
    pub trials: usize,
    pub seed: u64,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            trials: 1000,
            seed: 1,
        }
    }
}

/// Computes `k`, then the exact distance when it fits the budget and an
/// estimator upper bound otherwise.
pub fn compute_metrics(code: &CssCode, opts: &MetricsOptions) -> Result<CodeMetrics> {
    let n = code.n();
    let k = compute_k(code);
    let mut metrics = CodeMetrics {
        n,
        k,
        d: None,
        d_kind: None,
        d_x: None,
        d_z: None,
        estimator: None,
    };
    if k == 0 {
        return Ok(metrics);
    }
    let exact = if opts.budget > 0 {
        match distance_exact(code, opts.budget) {
            Ok(e) => Some(e),
            Err(Error::BudgetExceeded { .. }) if opts.trials > 0 => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    if let Some(e) = exact {
        metrics.d = Some(e.d);
        metrics.d_kind = Some(DistanceKind::Exact);
        metrics.d_x = e.d_x;
        metrics.d_z = e.d_z;
        return Ok(metrics);
    }
    let est = distance_estimate(code, opts.trials, opts.seed)?;
    metrics.d = Some(est.d);
    metrics.d_kind = Some(DistanceKind::UpperBound);
    metrics.d_x = Some(est.d_x);
    metrics.d_z = Some(est.d_z);
    metrics.estimator = Some(EstimatorInfo {
        method: ESTIMATOR_NAME.to_string(),
        trials: est.trials,
        seed: est.seed,
    });
    Ok(metrics)
}
