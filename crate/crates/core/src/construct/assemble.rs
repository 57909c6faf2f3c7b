use serde::Serialize;

use super::label::{BlockLabel, Side};
use super::spec::{derive_roles, ConstructionSpec};
use crate::codes::ClassicalCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Default cap on the number of qubits or checks in a single block.
pub const DEFAULT_BLOCK_CAP: usize = 1 << 22;

/// A block and the contiguous index range it occupies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockRange {
    pub label: BlockLabel,
    pub start: usize,
    pub len: usize,
}

impl BlockRange {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn contains(&self, index: usize) -> bool {
        (self.start..self.end()).contains(&index)
    }
}

/// Where each block lives: qubit blocks as column ranges, check blocks as
/// row ranges of `hz` / `hx`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layout {
    /// `(checks, bits)` of each sector's classical code.
    pub sector_dims: Vec<(usize, usize)>,
    pub qubits: Vec<BlockRange>,
    pub z_checks: Vec<BlockRange>,
    pub x_checks: Vec<BlockRange>,
}

impl Layout {
    /// Per-sector extent of a block: checks where the label has `C`, bits where it has `B`.
    pub fn block_shape(&self, label: &BlockLabel) -> Vec<usize> {
        label
            .sides()
            .iter()
            .zip(&self.sector_dims)
            .map(|(s, &(c, b))| if *s == Side::C { c } else { b })
            .collect()
    }

    /// Splits a flat index inside a block into per-sector indices (sector 1 slowest).
    pub fn multi_index(&self, label: &BlockLabel, mut offset: usize) -> Vec<usize> {
        let shape = self.block_shape(label);
        let mut idx = vec![0; shape.len()];
        for l in (0..shape.len()).rev() {
            idx[l] = offset % shape[l];
            offset /= shape[l];
        }
        idx
    }

    pub fn qubit_block_of(&self, column: usize) -> Option<&BlockRange> {
        self.qubits.iter().find(|b| b.contains(column))
    }
}

/// A CSS code together with the block layout it was assembled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    pub hx: BitMatrix,
    pub hz: BitMatrix,
    pub layout: Option<Layout>,
}

impl CssCode {
    /// Wraps a raw pair of check matrices.
    pub fn from_matrices(hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::DimensionMismatch {
                op: "css code",
                left: hx.shape(),
                right: hz.shape(),
            });
        }
        Ok(Self {
            hx,
            hz,
            layout: None,
        })
    }

    /// Number of physical qubits.
    pub fn n(&self) -> usize {
        self.hz.cols()
    }

    /// The X/Z exchanged code.
    pub fn swapped(&self) -> CssCode {
        CssCode {
            hx: self.hz.clone(),
            hz: self.hx.clone(),
            layout: self.layout.as_ref().map(|l| Layout {
                sector_dims: l.sector_dims.clone(),
                qubits: l.qubits.clone(),
                z_checks: l.x_checks.clone(),
                x_checks: l.z_checks.clone(),
            }),
        }
    }
}

fn block_size(label: &BlockLabel, dims: &[(usize, usize)], cap: usize) -> Result<usize> {
    let size = label
        .sides()
        .iter()
        .zip(dims)
        .map(|(s, &(c, b))| if *s == Side::C { c as u128 } else { b as u128 })
        .product::<u128>();
    if size > cap as u128 {
        return Err(Error::SectorOverflow {
            label: label.to_string(),
            size,
            cap,
        });
    }
    Ok(size as usize)
}

/// The action of check block `check` on qubit block `qubit`, or `None` when
/// their label distance is not one of the spec's FLIP counts.
///
/// In a differing sector the factor is `H` when the check side is `C` and
/// `H^T` when it is `B`; matching sectors contribute an identity.
pub fn sub_block(
    spec: &ConstructionSpec,
    codes: &[ClassicalCode],
    check: &BlockLabel,
    qubit: &BlockLabel,
) -> Option<BitMatrix> {
    if !spec.connects(check.distance(qubit)) {
        return None;
    }
    let mut acc = BitMatrix::identity(1);
    for (l, code) in codes.iter().enumerate() {
        let factor = match (check.side(l), qubit.side(l)) {
            (Side::C, Side::B) => code.h().clone(),
            (Side::B, Side::C) => code.h().transpose(),
            (Side::C, Side::C) => BitMatrix::identity(code.checks()),
            (Side::B, Side::B) => BitMatrix::identity(code.bits()),
        };
        acc = acc.kron(&factor);
    }
    Some(acc)
}

/// Assembles `hx` and `hz` for `spec` over the given classical codes.
pub fn assemble(spec: &ConstructionSpec, codes: &[ClassicalCode]) -> Result<CssCode> {
    assemble_with_cap(spec, codes, DEFAULT_BLOCK_CAP)
}

pub fn assemble_with_cap(
    spec: &ConstructionSpec,
    codes: &[ClassicalCode],
    cap: usize,
) -> Result<CssCode> {
    if codes.len() != spec.d() {
        return Err(Error::InvalidArgument(format!(
            "construction has {} sectors but {} classical codes were given",
            spec.d(),
            codes.len()
        )));
    }
    let roles = derive_roles(spec);
    let dims: Vec<(usize, usize)> = codes.iter().map(|c| (c.checks(), c.bits())).collect();

    let ranges = |labels: &[BlockLabel]| -> Result<Vec<BlockRange>> {
        let mut start = 0;
        labels
            .iter()
            .map(|label| {
                let len = block_size(label, &dims, cap)?;
                let r = BlockRange {
                    label: label.clone(),
                    start,
                    len,
                };
                start += len;
                Ok(r)
            })
            .collect()
    };
    let qubits = ranges(&roles.qubit_blocks)?;
    let z_checks = ranges(&roles.z_blocks)?;
    let x_checks = ranges(&roles.x_blocks)?;
    let n = qubits.last().map_or(0, BlockRange::end);

    let fill = |checks: &[BlockRange]| -> BitMatrix {
        let rows = checks.last().map_or(0, BlockRange::end);
        let mut h = BitMatrix::zeros(rows, n);
        for t in checks {
            for q in &qubits {
                if let Some(block) = sub_block(spec, codes, &t.label, &q.label) {
                    h.or_block(t.start, q.start, &block);
                }
            }
        }
        h
    };
    let hz = fill(&z_checks);
    let hx = fill(&x_checks);
    Ok(CssCode {
        hx,
        hz,
        layout: Some(Layout {
            sector_dims: dims,
            qubits,
            z_checks,
            x_checks,
        }),
    })
}

/// Whether every X check commutes with every Z check.
pub fn validate_css(code: &CssCode) -> bool {
    first_violation(code).is_none()
}

/// The first `(x_row, z_row)` pair with odd overlap, if any.
pub fn first_violation(code: &CssCode) -> Option<(usize, usize)> {
    if code.hx.cols() != code.hz.cols() {
        return Some((0, 0));
    }
    let product = code
        .hx
        .mat_mul(&code.hz.transpose())
        .expect("column counts checked above");
    product.nonzeros().into_iter().next()
}
