//! Randomized information-set search for low-weight logical operators.
//!
//! Each trial draws a column permutation and row-reduces a basis of the
//! commuting-check kernel, taking pivots in permuted order. Every reduced row
//! is a kernel vector with a single one inside the information set, so rows
//! tend to be sparse; the lightest row that is not a stabilizer gives an
//! upper bound on the distance. Trial `i` draws from ChaCha8 stream `i` of
//! `seed`, which makes the result independent of how trials are scheduled
//! and nonincreasing in the number of trials.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{compute_k, PauliType, SideData};
use crate::construct::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{eliminate, BitMatrix};

pub const ESTIMATOR_NAME: &str = "random-information-set";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceEstimate {
    /// Upper bound on the distance.
    pub d: usize,
    pub d_x: usize,
    pub d_z: usize,
    pub trials: usize,
    pub seed: u64,
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

struct Prepared {
    side: SideData,
    basis: BitMatrix,
}

impl Prepared {
    fn lightest(&self, order: &[usize], mut best: usize) -> usize {
        let mut work = self.basis.clone();
        let rank = eliminate(&mut work, order.iter().copied(), true).len();
        for r in 0..rank {
            let w = work.row_weight(r);
            if w < best && self.side.is_nontrivial(work.row_words(r)) {
                best = w;
            }
        }
        best
    }
}

pub fn distance_estimate(code: &CssCode, trials: usize, seed: u64) -> Result<DistanceEstimate> {
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "the estimator needs at least one trial".into(),
        ));
    }
    if compute_k(code) == 0 {
        return Err(Error::NoLogicals);
    }
    let n = code.n();
    let prepared = [PauliType::X, PauliType::Z].map(|kind| {
        let side = SideData::new(code, kind);
        let basis = BitMatrix::from_bitvecs(n, &side.kernel).expect("kernel vectors have length n");
        Prepared { side, basis }
    });

    let (d_x, d_z) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut trial_rng(seed, t));
            (
                prepared[0].lightest(&order, usize::MAX),
                prepared[1].lightest(&order, usize::MAX),
            )
        })
        .reduce(
            || (usize::MAX, usize::MAX),
            |a, b| (a.0.min(b.0), a.1.min(b.1)),
        );

    Ok(DistanceEstimate {
        d: d_x.min(d_z),
        d_x,
        d_z,
        trials,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::repetition_code;
    use crate::construct::{assemble, ConstructionSpec};
    use crate::metrics::{distance_exact, DEFAULT_BUDGET};

    fn rep_code(spec: &str, flips: &str, ls: &[usize]) -> CssCode {
        let spec = ConstructionSpec::parse(ls.len(), spec, flips).unwrap();
        let codes: Vec<_> = ls.iter().map(|&l| repetition_code(l).unwrap()).collect();
        assemble(&spec, &codes).unwrap()
    }

    #[test]
    fn deterministic_given_seed() {
        let code = rep_code("BBB,CCB", "1", &[2, 3, 3]);
        let a = distance_estimate(&code, 40, 9).unwrap();
        let b = distance_estimate(&code, 40, 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn nonincreasing_in_trials() {
        let code = rep_code("BBB", "1", &[3, 4, 5]);
        let mut prev = usize::MAX;
        for t in [1, 2, 5, 20, 80] {
            let e = distance_estimate(&code, t, 3).unwrap();
            assert!(e.d <= prev);
            prev = e.d;
        }
    }

    #[test]
    fn upper_bounds_exact() {
        for (seed, flips, ls) in [
            ("BC", "1", vec![3, 3]),
            ("BBB", "1", vec![2, 2, 3]),
            ("BBB", "1,3", vec![2, 2, 2]),
        ] {
            let code = rep_code(seed, flips, &ls);
            let exact = distance_exact(&code, DEFAULT_BUDGET).unwrap();
            let est = distance_estimate(&code, 200, 1).unwrap();
            assert!(est.d >= exact.d);
            assert_eq!(est.d, exact.d, "{seed} {flips} {ls:?}");
        }
    }

    #[test]
    fn errors() {
        let code = rep_code("BC", "1", &[2, 2]);
        assert!(distance_estimate(&code, 0, 1).is_err());
        let k0 = CssCode::from_matrices(BitMatrix::identity(2), BitMatrix::zeros(0, 2)).unwrap();
        assert!(matches!(
            distance_estimate(&k0, 5, 1),
            Err(Error::NoLogicals)
        ));
    }
}
