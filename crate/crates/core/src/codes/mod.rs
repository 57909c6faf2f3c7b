//! Classical codes used as sector inputs: periodic repetition codes, seeded
//! random LDPC matrices and alist interchange.

mod alist;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub use alist::{emit_alist, matrix_to_alist, parse_alist};

/// A classical code given by its parity-check matrix.
///
/// Rows of `h` are checks and columns are bits, so `h` is `L^c x L^b`.
/// The dual code swaps the two roles and is represented by `h` transposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCode {
    name: String,
    h: BitMatrix,
}

impl ClassicalCode {
    pub fn new(name: impl Into<String>, h: BitMatrix) -> Result<Self> {
        if h.rows() == 0 && h.cols() == 0 {
            return Err(Error::InvalidArgument(
                "a classical code needs at least one bit or one check".into(),
            ));
        }
        Ok(Self {
            name: name.into(),
            h,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn h(&self) -> &BitMatrix {
        &self.h
    }

    /// Number of bits, `L^b`.
    pub fn bits(&self) -> usize {
        self.h.cols()
    }

    /// Number of checks, `L^c`.
    pub fn checks(&self) -> usize {
        self.h.rows()
    }

    pub fn dual(&self) -> ClassicalCode {
        ClassicalCode {
            name: format!("dual({})", self.name),
            h: self.h.transpose(),
        }
    }

    pub fn into_matrix(self) -> BitMatrix {
        self.h
    }
}

/// Periodic repetition code of length `l`.
///
/// For `l >= 2` this is the `l x l` circulant where check `i` touches bits
/// `i` and `i + 1 (mod l)`. For `l = 1` the single check touches bit 0
/// twice, which cancels mod 2, so the matrix is `[0]`.
pub fn repetition_code(l: usize) -> Result<ClassicalCode> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "repetition code length must be at least 1".into(),
        ));
    }
    let mut h = BitMatrix::zeros(l, l);
    if l >= 2 {
        for i in 0..l {
            h.set(i, i, true);
            h.set(i, (i + 1) % l, true);
        }
    }
    ClassicalCode::new(format!("rep({l})"), h)
}

/// A random parity-check matrix whose rows each hold exactly `row_weight`
/// ones, drawn without replacement.
///
/// The generator is ChaCha8 seeded through `seed_from_u64(seed)`, which
/// gives the same matrix on every platform.
pub fn random_ldpc(
    rows: usize,
    cols: usize,
    row_weight: usize,
    seed: u64,
) -> Result<ClassicalCode> {
    if row_weight == 0 || row_weight > cols {
        return Err(Error::InvalidArgument(format!(
            "row weight {row_weight} must lie in 1..={cols}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = BitMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in rand::seq::index::sample(&mut rng, cols, row_weight) {
            h.set(i, j, true);
        }
    }
    ClassicalCode::new(format!("ldpc({rows}x{cols},w{row_weight},s{seed})"), h)
}
