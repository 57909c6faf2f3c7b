use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Which side of a classical Tanner graph a sector contributes: its bits
/// (`B`) or its checks (`C`). `B` sorts before `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    B,
    C,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::B => Side::C,
            Side::C => Side::B,
        }
    }
}

/// A block label: one [`Side`] per classical-code sector.
///
/// Labels order lexicographically with sector 1 most significant, which is
/// the order blocks are laid out in assembled matrices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockLabel(Vec<Side>);

impl BlockLabel {
    pub fn new(sides: Vec<Side>) -> Self {
        Self(sides)
    }

    /// Every label of length `d`, in layout order.
    pub fn all(d: usize) -> Vec<BlockLabel> {
        (0..1usize << d)
            .map(|mask| {
                BlockLabel(
                    (0..d)
                        .map(|l| {
                            if mask >> (d - 1 - l) & 1 == 1 {
                                Side::C
                            } else {
                                Side::B
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// Labels with an odd number of `B` entries, i.e. the check-block candidates.
    pub fn odd(d: usize) -> Vec<BlockLabel> {
        Self::all(d)
            .into_iter()
            .filter(BlockLabel::has_odd_b)
            .collect()
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn sides(&self) -> &[Side] {
        &self.0
    }

    pub fn side(&self, sector: usize) -> Side {
        self.0[sector]
    }

    pub fn b_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Side::B).count()
    }

    pub fn has_odd_b(&self) -> bool {
        self.b_count() % 2 == 1
    }

    /// Number of sectors in which the labels differ.
    pub fn distance(&self, other: &BlockLabel) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    pub fn differing_sectors(&self, other: &BlockLabel) -> Vec<usize> {
        (0..self.d()).filter(|&l| self.0[l] != other.0[l]).collect()
    }

    /// Applies a FLIP in each listed sector.
    pub fn flipped(&self, sectors: &[usize]) -> BlockLabel {
        let mut out = self.0.clone();
        for &l in sectors {
            out[l] = out[l].flipped();
        }
        BlockLabel(out)
    }

    /// All labels reachable by flipping exactly `count` distinct sectors.
    pub fn flip_neighbors(&self, count: usize) -> Vec<BlockLabel> {
        let d = self.d();
        (0u64..1 << d)
            .filter(|m| m.count_ones() as usize == count)
            .map(|m| {
                let sectors: Vec<usize> = (0..d).filter(|&l| m >> l & 1 == 1).collect();
                self.flipped(&sectors)
            })
            .collect()
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Side::B => "B",
                Side::C => "C",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BlockLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidSpec("empty block label".into()));
        }
        s.chars()
            .map(|ch| match ch {
                'B' | 'b' => Ok(Side::B),
                'C' | 'c' => Ok(Side::C),
                other => Err(Error::InvalidSpec(format!(
                    "block label '{s}' contains '{other}', expected only B or C"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BlockLabel)
    }
}

impl Serialize for BlockLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BlockLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> BlockLabel {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(l("bcB").to_string(), "BCB");
        assert!("BXB".parse::<BlockLabel>().is_err());
        assert!("".parse::<BlockLabel>().is_err());
    }

    #[test]
    fn ordering_is_lexicographic_b_first() {
        let all: Vec<String> = BlockLabel::all(3).iter().map(ToString::to_string).collect();
        assert_eq!(
            all,
            ["BBB", "BBC", "BCB", "BCC", "CBB", "CBC", "CCB", "CCC"]
        );
        let mut shuffled = vec![l("CB"), l("BC"), l("CC"), l("BB")];
        shuffled.sort();
        assert_eq!(shuffled, vec![l("BB"), l("BC"), l("CB"), l("CC")]);
    }

    #[test]
    fn odd_labels() {
        let odd: Vec<String> = BlockLabel::odd(3).iter().map(ToString::to_string).collect();
        assert_eq!(odd, ["BBB", "BCC", "CBC", "CCB"]);
        assert_eq!(BlockLabel::odd(4).len(), 8);
    }

    #[test]
    fn flips_and_distance() {
        let z = l("BBB");
        let mut one = z.flip_neighbors(1);
        one.sort();
        assert_eq!(one, vec![l("BBC"), l("BCB"), l("CBB")]);
        assert_eq!(z.flip_neighbors(3), vec![l("CCC")]);
        assert_eq!(z.distance(&l("CCB")), 2);
        assert_eq!(z.differing_sectors(&l("CBC")), vec![0, 2]);
        assert_eq!(l("BCBC").b_count(), 2);
    }
}
