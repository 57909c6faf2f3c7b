//! Fixed-n scan over all four cases: `cargo run --release --example fixed_n_scan -- 144 5000`

use std::time::Instant;

use flipcss::analytics::{predict, scan_fixed_n, CaseLabel};
use flipcss::metrics::MetricsOptions;

fn main() -> flipcss::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(144);
    let trials: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(1000);
    let opts = MetricsOptions {
        trials,
        ..MetricsOptions::default()
    };

    let start = Instant::now();
    let rows = scan_fixed_n(n, &CaseLabel::ALL, &opts)?;
    println!("case  L            k     d  kind         predicted (k, d)");
    for r in &rows {
        let p = predict(r.case, r.l)?;
        println!(
            "{}     {:<12} {:<5} {:<2} {:<12} ({}, {})",
            r.case,
            format!("{:?}", r.l),
            r.k,
            r.d.map_or("-".into(), |d| d.to_string()),
            r.d_kind.map_or("-".into(), |k| format!("{k:?}")),
            p.k.map_or("?".into(), |k| k.to_string()),
            p.d,
        );
    }
    let best = rows
        .iter()
        .filter_map(|r| Some((r.k * r.d? * r.d?, r)))
        .max_by_key(|(kd2, _)| *kd2);
    if let Some((kd2, r)) = best {
        println!("largest k*d^2 = {kd2} at {} {:?}", r.case, r.l);
    }
    eprintln!("{} rows in {:.1?}", rows.len(), start.elapsed());
    Ok(())
}
