use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::construct::{class_of, classify, ConstructionSpec, EquivalenceClass};
use crate::error::{Error, Result};

/// The four inequivalent D = 3 constructions.
///
/// | case | Z seed        | FLIP counts |
/// |------|---------------|-------------|
/// | A    | `BBB`         | 1           |
/// | B    | `BBB`, `CCB`  | 1           |
/// | C    | `BBB`         | 1, 3        |
/// | D    | `BBB`, `CCB`  | 1, 3        |
///
/// In B and D the `CCB` seed makes sectors 1 and 2 the in-plane directions,
/// so their closed forms depend on `gcd(L1, L2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::D];

    pub fn spec(self) -> ConstructionSpec {
        let (seed, flips) = match self {
            CaseLabel::A => ("BBB", "1"),
            CaseLabel::B => ("BBB,CCB", "1"),
            CaseLabel::C => ("BBB", "1,3"),
            CaseLabel::D => ("BBB,CCB", "1,3"),
        };
        ConstructionSpec::parse(3, seed, flips).expect("built-in case specs are valid")
    }

    /// Qubits per unit cell: three edge blocks, plus a body block for B, C, D.
    pub fn qubits_per_cell(self) -> usize {
        match self {
            CaseLabel::A => 3,
            _ => 4,
        }
    }

    /// Which case an arbitrary D = 3 spec is equivalent to, via the census
    /// canonical forms. `None` for illegal specs or other `D`.
    pub fn identify(spec: &ConstructionSpec) -> Option<CaseLabel> {
        if spec.d() != 3 {
            return None;
        }
        let classes = d3_classes();
        let idx = class_of(classes, spec)?;
        CaseLabel::ALL
            .into_iter()
            .find(|c| class_of(classes, &c.spec()) == Some(idx))
    }
}

fn d3_classes() -> &'static [EquivalenceClass] {
    static CLASSES: OnceLock<Vec<EquivalenceClass>> = OnceLock::new();
    CLASSES.get_or_init(|| classify(3).expect("D = 3 is within the enumeration cap"))
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CaseLabel::A),
            "B" | "b" => Ok(CaseLabel::B),
            "C" | "c" => Ok(CaseLabel::C),
            "D" | "d" => Ok(CaseLabel::D),
            other => Err(Error::InvalidArgument(format!(
                "unknown case '{other}', expected A, B, C or D"
            ))),
        }
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
