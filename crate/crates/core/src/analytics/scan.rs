use rayon::prelude::*;
use serde::Serialize;

use super::case::CaseLabel;
use crate::codes::repetition_code;
use crate::construct::{assemble, CssCode};
use crate::error::{Error, Result};
use crate::metrics::{compute_metrics, DistanceKind, MetricsOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub case: CaseLabel,
    #[serde(rename = "L")]
    pub l: [usize; 3],
    pub n: usize,
    pub k: usize,
    /// `None` when `k = 0`.
    pub d: Option<usize>,
    pub d_kind: Option<DistanceKind>,
}

/// The code for `case` on three periodic repetition codes of lengths `l`.
pub fn case_code(case: CaseLabel, l: [usize; 3]) -> Result<CssCode> {
    let codes = l
        .iter()
        .map(|&li| repetition_code(li))
        .collect::<Result<Vec<_>>>()?;
    assemble(&case.spec(), &codes)
}

/// Ordered triples with `l1 * l2 * l3 == volume`, lexicographic.
pub fn ordered_triples(volume: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for l1 in (1..=volume).filter(|d| volume.is_multiple_of(*d)) {
        let rest = volume / l1;
        for l2 in (1..=rest).filter(|d| rest.is_multiple_of(*d)) {
            out.push([l1, l2, rest / l2]);
        }
    }
    out
}

/// Every `(case, L)` with the requested qubit count, with numeric `k` and
/// `d` (exact when within `opts.budget`, otherwise an estimator bound).
/// Rows come back sorted by case, then `L`.
pub fn scan_fixed_n(n: usize, cases: &[CaseLabel], opts: &MetricsOptions) -> Result<Vec<ScanRow>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut cases = cases.to_vec();
    cases.sort_unstable();
    cases.dedup();
    let jobs: Vec<(CaseLabel, [usize; 3])> = cases
        .iter()
        .filter(|c| n.is_multiple_of(c.qubits_per_cell()))
        .flat_map(|&c| {
            ordered_triples(n / c.qubits_per_cell())
                .into_iter()
                .map(move |l| (c, l))
        })
        .collect();

    jobs.into_par_iter()
        .map(|(case, l)| {
            let code = case_code(case, l)?;
            let m = compute_metrics(&code, opts)?;
            Ok(ScanRow {
                case,
                l,
                n: m.n,
                k: m.k,
                d: m.d,
                d_kind: m.d_kind,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples() {
        assert_eq!(ordered_triples(1), vec![[1, 1, 1]]);
        assert_eq!(ordered_triples(4).len(), 6);
        // 36 = 2^2 3^2: C(4,2)^2 ordered factorizations
        assert_eq!(ordered_triples(36).len(), 36);
        assert!(ordered_triples(36).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn n3_is_single_case_a_row() {
        let rows = scan_fixed_n(3, &CaseLabel::ALL, &MetricsOptions::default()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(
            (rows[0].case, rows[0].l, rows[0].n),
            (CaseLabel::A, [1, 1, 1], 3)
        );
        assert_eq!(rows[0].k, 3);
    }

    #[test]
    fn no_factorization_gives_empty() {
        assert!(scan_fixed_n(5, &CaseLabel::ALL, &MetricsOptions::default())
            .unwrap()
            .is_empty());
        let rows = scan_fixed_n(
            12,
            &[CaseLabel::B, CaseLabel::A],
            &MetricsOptions::default(),
        )
        .unwrap();
        assert!(rows.iter().take_while(|r| r.case == CaseLabel::A).count() == 6);
        assert!(rows.iter().all(|r| r.n == 12));
        assert_eq!(rows.len(), 6 + 3);
    }

    #[test]
    fn zero_n_rejected() {
        assert!(scan_fixed_n(0, &CaseLabel::ALL, &MetricsOptions::default()).is_err());
    }
}
