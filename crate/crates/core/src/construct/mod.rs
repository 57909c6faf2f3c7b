//! The block construction: D classical codes, `2^D` block labels, FLIP
//! rules that assign blocks to Z checks, qubits and X checks, and the
//! Kronecker-product assembly of `hx` / `hz`.

mod assemble;
mod classify;
mod hgp;
mod label;
mod legality;
mod spec;

pub use assemble::{
    assemble, assemble_with_cap, first_violation, sub_block, validate_css, BlockRange, CssCode,
    Layout, DEFAULT_BLOCK_CAP,
};
pub use classify::{
    canonical_form, class_of, classify, classify_with_cap, EquivalenceClass, DEFAULT_CLASSIFY_CAP,
};
pub use hgp::hgp_reference;
pub use label::{BlockLabel, Side};
pub use legality::{blocks_connected, check_legality, LegalityReport};
pub use spec::{derive_roles, ConstructionSpec, RoleAssignment, MAX_SECTORS};

use crate::codes::ClassicalCode;
use crate::error::{Error, Result};

/// Derives roles, rejects illegal specs, then assembles.
pub fn build_checked(spec: &ConstructionSpec, codes: &[ClassicalCode]) -> Result<CssCode> {
    let report = check_legality(spec, &derive_roles(spec));
    if !report.is_legal() {
        return Err(Error::Illegal(report));
    }
    assemble(spec, codes)
}
