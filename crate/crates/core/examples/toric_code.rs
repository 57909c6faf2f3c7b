//! D = 2 reproduces the hypergraph product; with two repetition codes that is
//! the toric code.

use flipcss::codes::repetition_code;
use flipcss::construct::{assemble, hgp_reference, validate_css, ConstructionSpec};
use flipcss::metrics::{compute_metrics, MetricsOptions};

fn main() -> flipcss::Result<()> {
    let spec = ConstructionSpec::parse(2, "BC", "1")?;
    for l in 2..=5 {
        let rep = repetition_code(l)?;
        let code = assemble(&spec, &[rep.clone(), rep.clone()])?;
        let (hx, hz) = hgp_reference(&rep, &rep);
        assert!(code.hx == hx && code.hz == hz);
        assert!(validate_css(&code));
        let m = compute_metrics(&code, &MetricsOptions::default())?;
        println!("toric {l}x{l}: [[{}, {}, {}]]", m.n, m.k, m.d.unwrap());
    }
    Ok(())
}
