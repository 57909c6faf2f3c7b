use serde::Serialize;

use super::case::CaseLabel;
use crate::error::{Error, Result};

/// Closed-form parameters for three periodic repetition codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub n: usize,
    /// `None` for case C, which has no closed form for `k`.
    pub k: Option<usize>,
    pub d: usize,
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn pairwise_coprime([l1, l2, l3]: [usize; 3]) -> bool {
    gcd(l1, l2) == 1 && gcd(l1, l3) == 1 && gcd(l2, l3) == 1
}

/// Predicted `n`, `k` and `d` for `case` with repetition lengths `l`.
///
/// * A: `k = 3`, `d = min(L1, L2, L3)`.
/// * B: `k = 4 gcd(L1, L2)`, `d = min(2 lcm(L1, L2), L1 L2, L3)`.
/// * C: `d = min(L1, L2, L3, beta)` with `beta = 5` for pairwise coprime
///   lengths and 4 otherwise.
/// * D: `k = 4 gcd(L1, L2) + alpha (L3 - 1)` with `alpha = 8` when 3 divides
///   both `L1` and `L2`, else 0; `d` as in B.
pub fn predict(case: CaseLabel, l: [usize; 3]) -> Result<Prediction> {
    if l.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "lengths must be positive, got {l:?}"
        )));
    }
    let [l1, l2, l3] = l;
    let n = case.qubits_per_cell() * l1 * l2 * l3;
    let min_l = l1.min(l2).min(l3);
    let planar_d = (2 * lcm(l1, l2)).min(l1 * l2).min(l3);
    let (k, d) = match case {
        CaseLabel::A => (Some(3), min_l),
        CaseLabel::B => (Some(4 * gcd(l1, l2)), planar_d),
        CaseLabel::C => {
            let beta = if pairwise_coprime(l) { 5 } else { 4 };
            (None, min_l.min(beta))
        }
        CaseLabel::D => {
            let alpha = if l1 % 3 == 0 && l2 % 3 == 0 { 8 } else { 0 };
            (Some(4 * gcd(l1, l2) + alpha * (l3 - 1)), planar_d)
        }
    };
    Ok(Prediction { n, k, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(
            predict(CaseLabel::A, [4, 5, 6]).unwrap(),
            Prediction {
                n: 360,
                k: Some(3),
                d: 4
            }
        );
        assert_eq!(
            predict(CaseLabel::D, [3, 3, 12]).unwrap(),
            Prediction {
                n: 432,
                k: Some(100),
                d: 6
            }
        );
        assert_eq!(predict(CaseLabel::C, [2, 3, 5]).unwrap().d, 2);
        assert_eq!(predict(CaseLabel::C, [7, 9, 11]).unwrap().d, 5);
        assert_eq!(predict(CaseLabel::C, [6, 9, 11]).unwrap().d, 4);
        assert_eq!(predict(CaseLabel::C, [2, 3, 5]).unwrap().k, None);
    }

    #[test]
    fn fixed_n_optima() {
        assert_eq!(
            predict(CaseLabel::B, [1, 6, 6]).unwrap(),
            Prediction {
                n: 144,
                k: Some(4),
                d: 6
            }
        );
        assert_eq!(
            predict(CaseLabel::D, [2, 3, 6]).unwrap(),
            Prediction {
                n: 144,
                k: Some(4),
                d: 6
            }
        );
        assert_eq!(
            predict(CaseLabel::D, [3, 3, 4]).unwrap(),
            Prediction {
                n: 144,
                k: Some(36),
                d: 4
            }
        );
        assert_eq!(
            predict(CaseLabel::B, [2, 6, 9]).unwrap(),
            Prediction {
                n: 432,
                k: Some(8),
                d: 9
            }
        );
    }

    #[test]
    fn case_b_ignores_l3() {
        for l1 in 1..=5 {
            for l2 in 1..=5 {
                let k = predict(CaseLabel::B, [l1, l2, 1]).unwrap().k;
                assert!((2..=5).all(|l3| predict(CaseLabel::B, [l1, l2, l3]).unwrap().k == k));
            }
        }
    }

    #[test]
    fn zero_length_rejected() {
        assert!(predict(CaseLabel::A, [0, 1, 1]).is_err());
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!((gcd(12, 18), lcm(4, 6), gcd(7, 0)), (6, 12, 7));
    }
}
