//! Repetition-code inputs at `D = 3`: the four cases, their closed forms,
//! fixed-`n` scans and lattice geometry.

mod case;
mod lattice;
mod predict;
mod scan;

pub use case::CaseLabel;
pub use lattice::{lattice_geometry, LatticeGeometry, Site, SiteKind};
pub use predict::{gcd, lcm, predict, Prediction};
pub use scan::{case_code, ordered_triples, scan_fixed_n, ScanRow};
