//! Numeric k against the closed forms for L_i in 1..=6.

use flipcss::analytics::{case_code, predict, CaseLabel};
use flipcss::metrics::compute_k;

fn main() -> flipcss::Result<()> {
    for case in CaseLabel::ALL {
        let mut agree = 0;
        let mut total = 0;
        let mut sample = Vec::new();
        for l1 in 1..=6 {
            for l2 in 1..=6 {
                for l3 in 1..=6 {
                    let l = [l1, l2, l3];
                    let k = compute_k(&case_code(case, l)?);
                    total += 1;
                    match predict(case, l)?.k {
                        Some(p) if p == k => agree += 1,
                        Some(p) => println!("  {case} {l:?}: k={k}, closed form {p}"),
                        None => {}
                    }
                    if l1 == l2 && l2 == l3 {
                        sample.push(format!("k{l:?}={k}"));
                    }
                }
            }
        }
        if case == CaseLabel::C {
            println!("case C (no closed form): {}", sample.join(" "));
        } else {
            println!("case {case}: {agree}/{total} agree with the closed form");
        }
    }
    Ok(())
}
