//! Lattice geometry JSON for one case: `cargo run --example lattice -- B 2,2,2`

use flipcss::analytics::{lattice_geometry, CaseLabel, SiteKind};

fn main() -> flipcss::Result<()> {
    let mut args = std::env::args().skip(1);
    let case: CaseLabel = args.next().as_deref().unwrap_or("A").parse()?;
    let l: Vec<usize> = args
        .next()
        .unwrap_or_else(|| "2,2,2".into())
        .split(',')
        .filter_map(|x| x.trim().parse().ok())
        .collect();
    let l: [usize; 3] = l.try_into().expect("three lengths");

    let g = lattice_geometry(case, l)?;
    let count =
        |sites: &[flipcss::analytics::Site], kind| sites.iter().filter(|s| s.kind == kind).count();
    eprintln!(
        "case {case} {l:?}: {} edge + {} body qubits, {} corner + {} plaquette Z checks, {} corner + {} plaquette X checks",
        count(&g.qubits, SiteKind::Edge),
        count(&g.qubits, SiteKind::Body),
        count(&g.z_checks, SiteKind::Corner),
        count(&g.z_checks, SiteKind::Plaquette),
        count(&g.x_checks, SiteKind::Corner),
        count(&g.x_checks, SiteKind::Plaquette),
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&g).expect("geometry serializes")
    );
    Ok(())
}
