//! Exact minimum distance for small instances.
//!
//! Two enumerations are available per logical type. When the commuting-check
//! kernel has dimension `m` with `2^m` within budget, every kernel vector is
//! visited in Gray-code order. Otherwise supports are enumerated by
//! increasing weight, which is cheap whenever the distance is small. Both
//! count visited candidates against the same budget and refuse rather than
//! guess when it runs out.

use serde::Serialize;

use super::{compute_k, PauliType, SideData};
use crate::construct::CssCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Default number of candidates either enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactMethod {
    GrayCode,
    WeightSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactDistance {
    pub d: usize,
    /// `None` when this side was only shown to be at least `d`.
    pub d_x: Option<usize>,
    pub d_z: Option<usize>,
    pub method_x: ExactMethod,
    pub method_z: ExactMethod,
}

fn gray_code_min(side: &SideData) -> Option<usize> {
    let m = side.kernel.len();
    let n = side.n;
    let basis = BitMatrix::from_bitvecs(n, &side.kernel).expect("kernel vectors have length n");
    let signatures: Vec<Vec<u64>> = side
        .kernel
        .iter()
        .map(|g| side.signature(g.words()))
        .collect();
    let sig_len = signatures.first().map_or(0, Vec::len);

    let mut v = vec![0u64; n.div_ceil(64)];
    let mut sig = vec![0u64; sig_len];
    let mut best: Option<usize> = None;
    for step in 1u64..1 << m {
        let i = step.trailing_zeros() as usize;
        for (a, b) in v.iter_mut().zip(basis.row_words(i)) {
            *a ^= b;
        }
        for (a, b) in sig.iter_mut().zip(&signatures[i]) {
            *a ^= b;
        }
        if sig.iter().any(|&w| w != 0) {
            let w: usize = v.iter().map(|x| x.count_ones() as usize).sum();
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best
}

struct Exhausted;

/// Depth-first enumeration of supports of a fixed weight, carrying the
/// syndrome and detector signature incrementally.
struct WeightSearch {
    n: usize,
    syndrome_cols: BitMatrix,
    signature_cols: BitMatrix,
}

impl WeightSearch {
    fn new(side: &SideData, checks: &BitMatrix) -> Self {
        Self {
            n: side.n,
            syndrome_cols: checks.transpose(),
            signature_cols: side.detectors.transpose(),
        }
    }

    fn exists(&self, weight: usize, visited: &mut u64, budget: u64) -> Result<bool, Exhausted> {
        let mut syn = vec![0u64; self.syndrome_cols.cols().div_ceil(64)];
        let mut sig = vec![0u64; self.signature_cols.cols().div_ceil(64)];
        self.descend(0, weight, &mut syn, &mut sig, visited, budget)
    }

    fn toggle(&self, j: usize, syn: &mut [u64], sig: &mut [u64]) {
        for (a, b) in syn.iter_mut().zip(self.syndrome_cols.row_words(j)) {
            *a ^= b;
        }
        for (a, b) in sig.iter_mut().zip(self.signature_cols.row_words(j)) {
            *a ^= b;
        }
    }

    fn descend(
        &self,
        start: usize,
        remaining: usize,
        syn: &mut [u64],
        sig: &mut [u64],
        visited: &mut u64,
        budget: u64,
    ) -> Result<bool, Exhausted> {
        if remaining == 0 {
            *visited += 1;
            if *visited > budget {
                return Err(Exhausted);
            }
            return Ok(syn.iter().all(|&w| w == 0) && sig.iter().any(|&w| w != 0));
        }
        for j in start..=self.n - remaining {
            self.toggle(j, syn, sig);
            let found = self.descend(j + 1, remaining - 1, syn, sig, visited, budget);
            self.toggle(j, syn, sig);
            if found? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact `d = min(d_x, d_z)`, or a [`Error::BudgetExceeded`] refusal.
pub fn distance_exact(code: &CssCode, budget: u64) -> Result<ExactDistance> {
    if compute_k(code) == 0 {
        return Err(Error::NoLogicals);
    }
    let kinds = [PauliType::X, PauliType::Z];
    let sides = kinds.map(|kind| SideData::new(code, kind));
    let mut resolved: [Option<usize>; 2] = [None, None];
    let mut methods = [ExactMethod::WeightSearch; 2];
    let mut visited = 0u64;

    for (s, side) in sides.iter().enumerate() {
        let m = side.kernel.len();
        if m < 63 && (1u64 << m) <= budget.saturating_sub(visited) {
            visited += 1u64 << m;
            resolved[s] = gray_code_min(side);
            methods[s] = ExactMethod::GrayCode;
        }
    }

    let known = resolved.iter().flatten().copied().min();
    let pending: Vec<usize> = (0..2).filter(|&s| resolved[s].is_none()).collect();
    if !pending.is_empty() {
        let searches: Vec<WeightSearch> = pending
            .iter()
            .map(|&s| WeightSearch::new(&sides[s], kinds[s].matrices(code).0))
            .collect();
        let limit = known.map_or(code.n(), |b| b - 1);
        'weights: for w in 1..=limit {
            for (search, &s) in searches.iter().zip(&pending) {
                match search.exists(w, &mut visited, budget) {
                    Ok(true) => resolved[s] = Some(w),
                    Ok(false) => {}
                    Err(Exhausted) => {
                        return Err(Error::BudgetExceeded {
                            required: format!(
                                "2^{} (X) / 2^{} (Z) kernel vectors; weight search exhausted at weight {w}",
                                sides[0].kernel.len(),
                                sides[1].kernel.len()
                            ),
                            budget,
                        })
                    }
                }
            }
            if pending.iter().any(|&s| resolved[s].is_some()) {
                break 'weights;
            }
        }
    }

    let d = resolved
        .iter()
        .flatten()
        .copied()
        .min()
        .expect("a code with k >= 1 has a nontrivial logical operator");
    Ok(ExactDistance {
        d,
        d_x: resolved[0],
        d_z: resolved[1],
        method_x: methods[0],
        method_z: methods[1],
    })
}
