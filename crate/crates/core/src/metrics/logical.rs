use serde::{Deserialize, Serialize};

use crate::construct::CssCode;
use crate::gf2::{BitMatrix, BitVec};

/// Pauli type of a logical operator.
///
/// A `Z` logical commutes with every X check (lies in `ker hx`) and is not a
/// product of Z checks (lies outside `rowspace hz`); `X` is the mirror image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PauliType {
    X,
    Z,
}

impl PauliType {
    pub fn other(self) -> PauliType {
        match self {
            PauliType::X => PauliType::Z,
            PauliType::Z => PauliType::X,
        }
    }

    /// `(commuting checks, stabilizers)` for this logical type.
    pub(crate) fn matrices(self, code: &CssCode) -> (&BitMatrix, &BitMatrix) {
        match self {
            PauliType::Z => (&code.hx, &code.hz),
            PauliType::X => (&code.hz, &code.hx),
        }
    }
}

/// Representatives of a basis of `ker(checks) / rowspace(stabilizers)`.
///
/// Every returned vector is an actual kernel vector of the commuting checks,
/// chosen greedily from the kernel basis so that it is independent of the
/// stabilizers and of the vectors picked before it. The list has `k` entries.
pub fn logical_basis(code: &CssCode, kind: PauliType) -> Vec<BitVec> {
    let (checks, stabilizers) = kind.matrices(code);
    let mut span = stabilizers.echelon();
    checks
        .kernel_basis()
        .into_iter()
        .filter(|v| span.insert(v))
        .collect()
}
