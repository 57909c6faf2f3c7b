use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::label::BlockLabel;
use crate::error::{Error, Result};

/// Largest number of sectors a spec may have. Labels are enumerated through
/// bit masks, and `2^D` blocks beyond this are not practical anyway.
pub const MAX_SECTORS: usize = 16;

/// A construction: the number of sectors, the initial Z-check blocks, and the
/// set of odd FLIP counts used both to generate blocks and to connect checks
/// to qubits.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ConstructionSpec {
    d: usize,
    z_seed: BTreeSet<BlockLabel>,
    flip_counts: BTreeSet<usize>,
}

impl ConstructionSpec {
    pub fn new(
        d: usize,
        z_seed: impl IntoIterator<Item = BlockLabel>,
        flip_counts: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if d == 0 || d > MAX_SECTORS {
            return Err(Error::InvalidSpec(format!(
                "number of classical codes must be in 1..={MAX_SECTORS}, got {d}"
            )));
        }
        let z_seed: BTreeSet<BlockLabel> = z_seed.into_iter().collect();
        let flip_counts: BTreeSet<usize> = flip_counts.into_iter().collect();
        if z_seed.is_empty() {
            return Err(Error::InvalidSpec(
                "the Z-check seed must contain at least one block".into(),
            ));
        }
        for label in &z_seed {
            if label.d() != d {
                return Err(Error::InvalidSpec(format!(
                    "seed block {label} has {} sectors, expected {d}",
                    label.d()
                )));
            }
            if !label.has_odd_b() {
                return Err(Error::InvalidSpec(format!(
                    "seed block {label} has an even number of B entries; Z-check blocks need an odd count"
                )));
            }
        }
        if flip_counts.is_empty() {
            return Err(Error::InvalidSpec(
                "at least one FLIP count is required".into(),
            ));
        }
        for &f in &flip_counts {
            if f % 2 == 0 || f > d {
                return Err(Error::InvalidSpec(format!(
                    "FLIP count {f} must be odd and at most {d}"
                )));
            }
        }
        Ok(Self {
            d,
            z_seed,
            flip_counts,
        })
    }

    /// Parses comma-separated seed labels and FLIP counts, e.g. `"BBB,CCB"` and `"1,3"`.
    pub fn parse(d: usize, seed_blocks: &str, flips: &str) -> Result<Self> {
        let seed = seed_blocks
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<BlockLabel>>>()?;
        let flips = flips
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("'{s}' is not a FLIP count")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::new(d, seed, flips)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn z_seed(&self) -> &BTreeSet<BlockLabel> {
        &self.z_seed
    }

    pub fn flip_counts(&self) -> &BTreeSet<usize> {
        &self.flip_counts
    }

    /// Whether a check block and a qubit block at this label distance interact.
    pub fn connects(&self, distance: usize) -> bool {
        self.flip_counts.contains(&distance)
    }

    /// The spec that starts from this spec's X-check blocks, i.e. the
    /// X/Z-exchanged construction. `None` when there are no X-check blocks.
    pub fn swapped(&self) -> Option<ConstructionSpec> {
        let roles = derive_roles(self);
        if roles.x_blocks.is_empty() {
            return None;
        }
        Some(ConstructionSpec {
            d: self.d,
            z_seed: roles.x_blocks.into_iter().collect(),
            flip_counts: self.flip_counts.clone(),
        })
    }

    pub(crate) fn order_key(&self) -> (usize, &BTreeSet<BlockLabel>) {
        (self.z_seed.len(), &self.z_seed)
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seed: Vec<String> = self.z_seed.iter().map(ToString::to_string).collect();
        let flips: Vec<String> = self.flip_counts.iter().map(ToString::to_string).collect();
        write!(
            f,
            "D={} seed={{{}}} flips={{{}}}",
            self.d,
            seed.join(","),
            flips.join(",")
        )
    }
}

impl fmt::Debug for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Blocks assigned to each role, each list in layout order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoleAssignment {
    pub z_blocks: Vec<BlockLabel>,
    pub qubit_blocks: Vec<BlockLabel>,
    pub x_blocks: Vec<BlockLabel>,
}

fn flip_closure<'a>(
    from: impl IntoIterator<Item = &'a BlockLabel>,
    flip_counts: &BTreeSet<usize>,
) -> BTreeSet<BlockLabel> {
    let mut out = BTreeSet::new();
    for label in from {
        for &f in flip_counts {
            out.extend(label.flip_neighbors(f));
        }
    }
    out
}

/// Runs the three assignment steps: Z seed, qubits from one round of FLIPs,
/// X checks from a second round minus the Z blocks.
pub fn derive_roles(spec: &ConstructionSpec) -> RoleAssignment {
    let qubits = flip_closure(&spec.z_seed, &spec.flip_counts);
    let mut x = flip_closure(&qubits, &spec.flip_counts);
    for z in &spec.z_seed {
        x.remove(z);
    }
    RoleAssignment {
        z_blocks: spec.z_seed.iter().cloned().collect(),
        qubit_blocks: qubits.into_iter().collect(),
        x_blocks: x.into_iter().collect(),
    }
}
