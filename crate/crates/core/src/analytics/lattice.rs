use serde::Serialize;

use super::case::CaseLabel;
use super::scan::case_code;
use crate::construct::{BlockLabel, BlockRange, Layout, Side};
use crate::error::Result;
use crate::gf2::BitMatrix;

/// Where a block sits in the unit cell, by its number of `C` sectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SiteKind {
    Corner,
    Edge,
    Plaquette,
    Body,
}

impl SiteKind {
    fn of(label: &BlockLabel) -> SiteKind {
        match label.d() - label.b_count() {
            0 => SiteKind::Corner,
            1 => SiteKind::Edge,
            2 => SiteKind::Plaquette,
            _ => SiteKind::Body,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Site {
    /// Column of the qubit, or row of the check in its matrix.
    pub index: usize,
    pub block: BlockLabel,
    pub kind: SiteKind,
    /// Periodic coordinates; a `C` sector adds one half.
    pub coord: [f64; 3],
    /// Qubits a check acts on. Empty for qubit sites.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub support: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeGeometry {
    pub case: CaseLabel,
    #[serde(rename = "L")]
    pub l: [usize; 3],
    pub n: usize,
    pub qubits: Vec<Site>,
    pub z_checks: Vec<Site>,
    pub x_checks: Vec<Site>,
}

fn sites(layout: &Layout, blocks: &[BlockRange], checks: Option<&BitMatrix>) -> Vec<Site> {
    let mut out = Vec::new();
    for block in blocks {
        for offset in 0..block.len {
            let idx = layout.multi_index(&block.label, offset);
            let mut coord = [0.0; 3];
            for (s, c) in coord.iter_mut().enumerate() {
                let half = if block.label.side(s) == Side::C {
                    0.5
                } else {
                    0.0
                };
                *c = idx[s] as f64 + half;
            }
            let index = block.start + offset;
            out.push(Site {
                index,
                block: block.label.clone(),
                kind: SiteKind::of(&block.label),
                coord,
                support: checks.map_or_else(Vec::new, |h| h.row_support(index)),
            });
        }
    }
    out
}

/// Positions of every qubit and check of `case` on the `L1 x L2 x L3`
/// torus, with check supports read off `hz` and `hx`.
///
/// Repetition check `i` couples bits `i` and `i + 1`, so a check-side index
/// `i` sits at `i + 1/2`.
pub fn lattice_geometry(case: CaseLabel, l: [usize; 3]) -> Result<LatticeGeometry> {
    let code = case_code(case, l)?;
    let layout = code
        .layout
        .as_ref()
        .expect("assembled codes carry a layout");
    Ok(LatticeGeometry {
        case,
        l,
        n: code.n(),
        qubits: sites(layout, &layout.qubits, None),
        z_checks: sites(layout, &layout.z_checks, Some(&code.hz)),
        x_checks: sites(layout, &layout.x_checks, Some(&code.hx)),
    })
}
