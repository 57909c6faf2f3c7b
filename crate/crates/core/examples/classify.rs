//! Census of inequivalent constructions: `cargo run --example classify -- 4`

use flipcss::construct::classify;

fn main() -> flipcss::Result<()> {
    let d: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let classes = classify(d)?;
    println!("D = {d}: {} classes", classes.len());
    for (i, c) in classes.iter().enumerate() {
        println!(
            "  class {i}: |seed| = {}, flips {:?}, x{} ({} labelings), representative {}",
            c.seed_size, c.flip_counts, c.members, c.labelings, c.representative
        );
    }
    Ok(())
}
