use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::label::BlockLabel;
use super::spec::{ConstructionSpec, RoleAssignment};

/// Reasons a construction is rejected.
///
/// `decoupled` means the block graph (check blocks joined to qubit blocks at
/// an allowed FLIP distance) splits into several components, so the code is
/// a disjoint union of smaller codes. `role_conflict` cannot arise from
/// [`super::derive_roles`] but is checked for hand-built assignments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LegalityReport {
    pub no_x_checks: bool,
    pub decoupled: bool,
    pub role_conflict: bool,
}

impl LegalityReport {
    pub fn is_legal(&self) -> bool {
        !(self.no_x_checks || self.decoupled || self.role_conflict)
    }
}

impl fmt::Display for LegalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_legal() {
            return f.write_str("legal");
        }
        let mut reasons = Vec::new();
        if self.no_x_checks {
            reasons.push("no X-check blocks");
        }
        if self.decoupled {
            reasons.push("block graph is disconnected");
        }
        if self.role_conflict {
            reasons.push("a block has two roles");
        }
        f.write_str(&reasons.join("; "))
    }
}

/// Connectivity of the block graph over all assigned blocks.
pub fn blocks_connected(roles: &RoleAssignment, flip_counts: &BTreeSet<usize>) -> bool {
    let checks: Vec<&BlockLabel> = roles.z_blocks.iter().chain(&roles.x_blocks).collect();
    let qubits = &roles.qubit_blocks;
    let total = checks.len() + qubits.len();
    if total <= 1 {
        return true;
    }
    // nodes 0..checks are check blocks, the rest qubit blocks
    let mut seen = vec![false; total];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(node) = stack.pop() {
        let neighbors: Vec<usize> = if node < checks.len() {
            (0..qubits.len())
                .filter(|&q| flip_counts.contains(&checks[node].distance(&qubits[q])))
                .map(|q| checks.len() + q)
                .collect()
        } else {
            let q = &qubits[node - checks.len()];
            (0..checks.len())
                .filter(|&c| flip_counts.contains(&checks[c].distance(q)))
                .collect()
        };
        for m in neighbors {
            if !seen[m] {
                seen[m] = true;
                stack.push(m);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn check_legality(spec: &ConstructionSpec, roles: &RoleAssignment) -> LegalityReport {
    let z: BTreeSet<&BlockLabel> = roles.z_blocks.iter().collect();
    let x: BTreeSet<&BlockLabel> = roles.x_blocks.iter().collect();
    let role_conflict = z.intersection(&x).next().is_some()
        || roles
            .qubit_blocks
            .iter()
            .any(|q| z.contains(q) || x.contains(q));
    LegalityReport {
        no_x_checks: roles.x_blocks.is_empty(),
        decoupled: !blocks_connected(roles, spec.flip_counts()),
        role_conflict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::derive_roles;

    fn labels(s: &[&str]) -> Vec<BlockLabel> {
        s.iter().map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn all_odd_seeds_leave_no_x_checks() {
        let spec = ConstructionSpec::parse(3, "BBB,BCC,CBC,CCB", "1").unwrap();
        let report = check_legality(&spec, &derive_roles(&spec));
        assert!(report.no_x_checks);
        assert!(!report.is_legal());
    }

    #[test]
    fn case_a_is_legal() {
        let spec = ConstructionSpec::parse(3, "BBB", "1").unwrap();
        let report = check_legality(&spec, &derive_roles(&spec));
        assert!(report.is_legal(), "{report}");
    }

    #[test]
    fn three_flips_alone_never_reach_x_blocks() {
        for seed in BlockLabel::odd(3) {
            let spec = ConstructionSpec::new(3, [seed], [3]).unwrap();
            assert!(check_legality(&spec, &derive_roles(&spec)).no_x_checks);
        }
    }

    #[test]
    fn disconnected_assignment_is_decoupled() {
        // two groups of blocks around BBBB and CCCC; every cross pair is 3 FLIPs apart
        let spec = ConstructionSpec::parse(4, "BBBC", "1").unwrap();
        let roles = RoleAssignment {
            z_blocks: labels(&["BBBC", "CCCB"]),
            qubit_blocks: labels(&["BBBB", "CCCC"]),
            x_blocks: labels(&["BBCB", "CCBC"]),
        };
        let report = check_legality(&spec, &roles);
        assert!(report.decoupled);
        assert!(!report.role_conflict);

        let connected = derive_roles(&spec);
        assert!(blocks_connected(&connected, spec.flip_counts()));
    }

    #[test]
    fn role_conflict_flagged() {
        let spec = ConstructionSpec::parse(2, "BC", "1").unwrap();
        let roles = RoleAssignment {
            z_blocks: labels(&["BC"]),
            qubit_blocks: labels(&["BB", "CC"]),
            x_blocks: labels(&["BC", "CB"]),
        };
        assert!(check_legality(&spec, &roles).role_conflict);
    }

    #[test]
    fn recipe_output_with_x_checks_is_never_decoupled_up_to_d4() {
        for d in 2..=4 {
            let odd = BlockLabel::odd(d);
            let flip_sets: Vec<Vec<usize>> = (1u32..1 << d.div_ceil(2))
                .map(|m| {
                    (0..d.div_ceil(2))
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| 2 * i + 1)
                        .collect()
                })
                .collect();
            for mask in 1u32..1 << odd.len() {
                let seed: Vec<BlockLabel> = (0..odd.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| odd[i].clone())
                    .collect();
                for flips in &flip_sets {
                    let spec = ConstructionSpec::new(d, seed.clone(), flips.clone()).unwrap();
                    let roles = derive_roles(&spec);
                    if roles.x_blocks.is_empty() {
                        continue;
                    }
                    assert!(blocks_connected(&roles, spec.flip_counts()), "{spec}");
                }
            }
        }
    }
}
