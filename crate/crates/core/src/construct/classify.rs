//! Exhaustive census of constructions for a given number of sectors.
//!
//! Every nonempty seed of odd-`B` labels is combined with every nonempty set
//! of odd FLIP counts `<= D`. Illegal specs are dropped, each survivor is
//! merged with its X/Z-exchanged partner, and the resulting orbits are
//! grouped by `(FLIP counts, seed size of the canonical member)`. Permuting
//! the classical codes is not an equivalence: the sectors are distinguishable.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::label::BlockLabel;
use super::legality::check_legality;
use super::spec::{derive_roles, ConstructionSpec};
use crate::error::{Error, Result};

/// Default largest `D` for [`classify`]. `D = 5` already visits ~460k specs.
pub const DEFAULT_CLASSIFY_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    /// Smallest canonical spec in the class.
    pub representative: ConstructionSpec,
    pub seed_size: usize,
    pub flip_counts: BTreeSet<usize>,
    /// Inequivalent constructions after X/Z merging.
    pub members: usize,
    /// Legal specs before merging.
    pub labelings: usize,
    pub canonical_members: Vec<ConstructionSpec>,
}

fn is_legal(spec: &ConstructionSpec) -> bool {
    check_legality(spec, &derive_roles(spec)).is_legal()
}

/// The member of `{spec, swapped(spec)}` with the smaller seed (by size, then
/// lexicographically). The partner only counts when it is itself legal.
pub fn canonical_form(spec: &ConstructionSpec) -> ConstructionSpec {
    match spec.swapped() {
        Some(partner) if is_legal(&partner) && partner.order_key() < spec.order_key() => partner,
        _ => spec.clone(),
    }
}

fn odd_flip_sets(d: usize) -> Vec<BTreeSet<usize>> {
    let odds: Vec<usize> = (1..=d).step_by(2).collect();
    (1u32..1 << odds.len())
        .map(|m| {
            (0..odds.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| odds[i])
                .collect()
        })
        .collect()
}

pub fn classify(d: usize) -> Result<Vec<EquivalenceClass>> {
    classify_with_cap(d, DEFAULT_CLASSIFY_CAP)
}

pub fn classify_with_cap(d: usize, cap: usize) -> Result<Vec<EquivalenceClass>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "classification needs D >= 2, got {d}"
        )));
    }
    if d > cap {
        return Err(Error::EnumerationCap { d, cap });
    }
    let odd = BlockLabel::odd(d);
    let flip_sets = odd_flip_sets(d);

    let legal: Vec<(ConstructionSpec, ConstructionSpec)> = (1u64..1 << odd.len())
        .into_par_iter()
        .flat_map_iter(|mask| {
            let seed: Vec<BlockLabel> = (0..odd.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| odd[i].clone())
                .collect();
            flip_sets
                .iter()
                .filter_map(|flips| {
                    let spec =
                        ConstructionSpec::new(d, seed.clone(), flips.iter().copied()).ok()?;
                    is_legal(&spec).then(|| (canonical_form(&spec), spec))
                })
                .collect::<Vec<_>>()
        })
        .collect();

    let mut orbits: BTreeMap<(BTreeSet<usize>, usize), (BTreeSet<ConstructionSpec>, usize)> =
        BTreeMap::new();
    for (canonical, _) in legal {
        let key = (canonical.flip_counts().clone(), canonical.z_seed().len());
        let entry = orbits.entry(key).or_default();
        entry.0.insert(canonical);
        entry.1 += 1;
    }

    Ok(orbits
        .into_iter()
        .map(|((flip_counts, seed_size), (members, labelings))| {
            let canonical_members: Vec<ConstructionSpec> = members.into_iter().collect();
            EquivalenceClass {
                representative: canonical_members[0].clone(),
                seed_size,
                flip_counts,
                members: canonical_members.len(),
                labelings,
                canonical_members,
            }
        })
        .collect())
}

/// Index of the class in `classes` that contains `spec`, if any.
pub fn class_of(classes: &[EquivalenceClass], spec: &ConstructionSpec) -> Option<usize> {
    let canonical = canonical_form(spec);
    classes
        .iter()
        .position(|c| c.canonical_members.binary_search(&canonical).is_ok())
}
