//! Logical operator bases and the lightest representatives found by the estimator.

use flipcss::analytics::{case_code, CaseLabel};
use flipcss::gf2::BitVec;
use flipcss::metrics::{distance_estimate, logical_basis, PauliType};

fn main() -> flipcss::Result<()> {
    let code = case_code(CaseLabel::A, [3, 3, 3])?;
    for kind in [PauliType::X, PauliType::Z] {
        let basis = logical_basis(&code, kind);
        let weights: Vec<usize> = basis.iter().map(BitVec::weight).collect();
        println!(
            "{kind:?} logicals: {} basis vectors, weights {weights:?}",
            basis.len()
        );
    }
    let est = distance_estimate(&code, 500, 1)?;
    println!("distance <= {} (X: {}, Z: {})", est.d, est.d_x, est.d_z);
    Ok(())
}
