use thiserror::Error;

use crate::construct::LegalityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{format} parse error at line {line}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        message: String,
    },

    #[error("invalid construction: {0}")]
    InvalidSpec(String),

    #[error("illegal construction: {0}")]
    Illegal(LegalityReport),

    #[error("block of {label} has {size} entries, above the cap of {cap}")]
    SectorOverflow {
        label: String,
        size: u128,
        cap: usize,
    },

    #[error("exact search exceeds the budget of {budget} candidates (needs {required})")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("code has no logical qubits (k = 0); distance is undefined")]
    NoLogicals,

    #[error("classification of D = {d} exceeds the enumeration cap D <= {cap}")]
    EnumerationCap { d: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
