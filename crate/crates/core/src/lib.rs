//! Quantum CSS codes built from several classical codes.
//!
//! Each of the `D` classical codes contributes a sector. Block labels pick
//! the bit side or the check side of every sector; a seed of Z-check blocks
//! and a set of odd FLIP counts determine which blocks become qubits and
//! which become X checks, and checks act on qubits through Kronecker
//! products of `H`, `H^T` and identities. For `D = 2` this is the
//! hypergraph product.
//!
//! ```
//! use flipcss::codes::repetition_code;
//! use flipcss::construct::{assemble, validate_css, ConstructionSpec};
//! use flipcss::metrics::compute_k;
//!
//! let spec = ConstructionSpec::parse(3, "BBB", "1")?;
//! let codes: Vec<_> = [2, 2, 2].iter().map(|&l| repetition_code(l)).collect::<Result<_, _>>()?;
//! let code = assemble(&spec, &codes)?;
//! assert!(validate_css(&code));
//! assert_eq!((code.n(), compute_k(&code)), (24, 3));
//! # Ok::<(), flipcss::Error>(())
//! ```

pub mod analytics;
pub mod cli;
pub mod codes;
pub mod construct;
pub mod error;
pub mod gf2;
pub mod metrics;

pub use error::{Error, Result};
