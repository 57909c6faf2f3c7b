//! Random legal constructions on random LDPC sectors always commute.

use flipcss::codes::random_ldpc;
use flipcss::construct::validate_css;
use flipcss::construct::{assemble, check_legality, derive_roles, BlockLabel, ConstructionSpec};
use flipcss::metrics::compute_k;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> flipcss::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut tried = 0;
    let mut legal = 0;
    while legal < 300 {
        let d = rng.gen_range(2..=4);
        let odd = BlockLabel::odd(d);
        let seed: Vec<BlockLabel> = odd.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        let flips: Vec<usize> = (1..=d).step_by(2).filter(|_| rng.gen_bool(0.6)).collect();
        tried += 1;
        let Ok(spec) = ConstructionSpec::new(d, seed, flips) else {
            continue;
        };
        if !check_legality(&spec, &derive_roles(&spec)).is_legal() {
            continue;
        }
        legal += 1;
        let codes = (0..d)
            .map(|_| {
                let (r, c) = (rng.gen_range(1..=5), rng.gen_range(2..=5));
                random_ldpc(r, c, rng.gen_range(1..=c), rng.gen())
            })
            .collect::<flipcss::Result<Vec<_>>>()?;
        let code = assemble(&spec, &codes)?;
        assert!(validate_css(&code), "{spec}");
        if legal % 50 == 0 {
            println!("{spec}: n={} k={}", code.n(), compute_k(&code));
        }
    }
    println!("{legal} legal specs out of {tried} draws, all CSS");
    Ok(())
}
