#![allow(dead_code)]

use flipcss::codes::{random_ldpc, repetition_code, ClassicalCode};
use flipcss::construct::{check_legality, derive_roles, BlockLabel, ConstructionSpec};
use rand::Rng;

pub fn rep_codes(l: &[usize]) -> Vec<ClassicalCode> {
    l.iter().map(|&x| repetition_code(x).unwrap()).collect()
}

pub fn is_legal(spec: &ConstructionSpec) -> bool {
    check_legality(spec, &derive_roles(spec)).is_legal()
}

/// A uniformly drawn seed/flip pair, redrawn until legal.
pub fn random_legal_spec<R: Rng>(rng: &mut R, d: usize) -> ConstructionSpec {
    let odd = BlockLabel::odd(d);
    let flips: Vec<usize> = (1..=d).step_by(2).collect();
    loop {
        let seed_mask = rng.gen_range(1..1u64 << odd.len());
        let flip_mask = rng.gen_range(1..1u64 << flips.len());
        let seed = (0..odd.len())
            .filter(|i| seed_mask >> i & 1 == 1)
            .map(|i| odd[i].clone());
        let f = (0..flips.len())
            .filter(|i| flip_mask >> i & 1 == 1)
            .map(|i| flips[i]);
        let spec = ConstructionSpec::new(d, seed, f).unwrap();
        if is_legal(&spec) {
            return spec;
        }
    }
}

/// `d` random sparse codes with at most `max_dim` checks and bits each.
pub fn random_codes<R: Rng>(rng: &mut R, d: usize, max_dim: usize) -> Vec<ClassicalCode> {
    (0..d)
        .map(|_| {
            let rows = rng.gen_range(1..=max_dim);
            let cols = rng.gen_range(1..=max_dim);
            let w = rng.gen_range(1..=cols.min(3));
            random_ldpc(rows, cols, w, rng.gen()).unwrap()
        })
        .collect()
}
