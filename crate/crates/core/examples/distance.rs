//! Exact and estimated distance of one D = 3 case:
//! `cargo run --release --example distance -- C 3,4,5 2000`

use std::time::Instant;

use flipcss::analytics::{case_code, predict, CaseLabel};
use flipcss::metrics::{compute_k, distance_estimate, distance_exact, DEFAULT_BUDGET};
use flipcss::Error;

fn main() -> flipcss::Result<()> {
    let mut args = std::env::args().skip(1);
    let case: CaseLabel = args.next().as_deref().unwrap_or("D").parse()?;
    let l: Vec<usize> = args
        .next()
        .as_deref()
        .unwrap_or("2,3,3")
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad length '{x}'")))
        })
        .collect::<Result<_, _>>()?;
    let l: [usize; 3] = l
        .try_into()
        .map_err(|_| Error::InvalidArgument("need three lengths".into()))?;
    let trials: usize = args.next().and_then(|t| t.parse().ok()).unwrap_or(2000);

    let code = case_code(case, l)?;
    let p = predict(case, l)?;
    println!(
        "case {case} L={l:?}: n={} k={} (closed form: k={:?}, d={})",
        code.n(),
        compute_k(&code),
        p.k,
        p.d
    );

    let t = Instant::now();
    match distance_exact(&code, DEFAULT_BUDGET) {
        Ok(e) => println!(
            "exact: d={} (d_x={:?}, d_z={:?}) via {:?}/{:?} in {:.1?}",
            e.d,
            e.d_x,
            e.d_z,
            e.method_x,
            e.method_z,
            t.elapsed()
        ),
        Err(e) => println!("exact: {e}"),
    }
    let t = Instant::now();
    let est = distance_estimate(&code, trials, 1)?;
    println!(
        "estimate ({trials} trials, seed 1): d<={} (d_x<={}, d_z<={}) in {:.1?}",
        est.d,
        est.d_x,
        est.d_z,
        t.elapsed()
    );
    Ok(())
}
