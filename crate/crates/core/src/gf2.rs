//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are packed into `u64` words, least significant bit first. Bits past
//! the logical column count in the last word of every row are always zero,
//! so word-level comparisons, popcounts and XORs never need masking.
//!
//! The Kronecker product uses the "left factor slowest" index convention:
//! entry `((i1, i2), (j1, j2))` of `kron(a, b)` lives at row `i1 * b.rows() + i2`
//! and column `j1 * b.cols() + j2`. Block layouts in [`crate::construct`]
//! depend on this ordering.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// ORs `src_len` bits of `src` into `dst` starting at bit `offset`.
fn or_shifted(dst: &mut [u64], offset: usize, src: &[u64], src_len: usize) {
    if src_len == 0 {
        return;
    }
    let word = offset / WORD_BITS;
    let shift = offset % WORD_BITS;
    for (s, &w) in src.iter().enumerate().take(words_for(src_len)) {
        if w == 0 {
            continue;
        }
        let idx = word + s;
        dst[idx] |= w << shift;
        if shift != 0 {
            let spill = w >> (WORD_BITS - shift);
            if spill != 0 {
                dst[idx + 1] |= spill;
            }
        }
    }
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Builds a vector from 0/1 entries; any nonzero byte counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b != 0);
        }
        v
    }

    /// Builds a vector of length `len` with ones at `support`.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Indices of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }
}

fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD_BITS + tz)
        })
    })
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A dense matrix over GF(2), packed row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows have different lengths.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows in BitMatrix::from_rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b != 0);
            }
        }
        m
    }

    /// Builds a matrix with `cols` columns from a list of row supports.
    pub fn from_row_supports(cols: usize, supports: &[Vec<usize>]) -> Result<Self> {
        let mut m = Self::zeros(supports.len(), cols);
        for (i, s) in supports.iter().enumerate() {
            for &j in s {
                if j >= cols {
                    return Err(Error::InvalidArgument(format!(
                        "column index {j} out of range for {cols} columns"
                    )));
                }
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    /// Stacks vectors as rows. All vectors must have length `cols`.
    pub fn from_bitvecs(cols: usize, vectors: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(vectors.len(), cols);
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "vector of length {} cannot be a row of a matrix with {cols} columns",
                    v.len()
                )));
            }
            m.row_words_mut(i).copy_from_slice(v.words());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        let mask = 1u64 << (j % WORD_BITS);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BitVec {
        assert!(i < self.rows, "row {i} out of range");
        BitVec::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn row_support(&self, i: usize) -> Vec<usize> {
        iter_ones(self.row_words(i)).collect()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn row_vectors(&self) -> Vec<BitVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Number of nonzero entries.
    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Nonzero entries as `(row, col)`, row-major.
    pub fn nonzeros(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| iter_ones(self.row_words(i)).map(move |j| (i, j)))
            .collect()
    }

    /// `rows[dst] ^= rows[src]`.
    pub(crate) fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, w) in b.iter_mut().zip(a) {
            *d ^= w;
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (first, second) = self.data.split_at_mut(hi * s);
        first[lo * s..(lo + 1) * s].swap_with_slice(&mut second[..s]);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in iter_ones(self.row_words(i)) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mat_mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let stride = out.stride;
            let dst = &mut out.data[i * stride..(i + 1) * stride];
            for k in iter_ones(self.row_words(i)) {
                for (d, w) in dst.iter_mut().zip(other.row_words(k)) {
                    *d ^= w;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self
                .row_words(i)
                .iter()
                .zip(v.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>();
            if parity % 2 == 1 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Kronecker product with the left factor's indices varying slowest.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            let cols1: Vec<usize> = iter_ones(self.row_words(i1)).collect();
            if cols1.is_empty() {
                continue;
            }
            for i2 in 0..other.rows {
                let src = other.row_words(i2);
                let r = i1 * other.rows + i2;
                let stride = out.stride;
                let dst = &mut out.data[r * stride..(r + 1) * stride];
                for &j1 in &cols1 {
                    or_shifted(dst, j1 * other.cols, src, other.cols);
                }
            }
        }
        out
    }

    /// ORs `block` into `self` with its top-left corner at `(row, col)`.
    pub(crate) fn or_block(&mut self, row: usize, col: usize, block: &BitMatrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for i in 0..block.rows {
            let stride = self.stride;
            let dst = &mut self.data[(row + i) * stride..(row + i + 1) * stride];
            or_shifted(dst, col, block.row_words(i), block.cols);
        }
    }

    /// Vertical concatenation. An empty list yields a `0 x 0` matrix.
    pub fn vstack(parts: &[&BitMatrix]) -> Result<BitMatrix> {
        let Some(first) = parts.first() else {
            return Ok(BitMatrix::zeros(0, 0));
        };
        let cols = first.cols;
        if let Some(bad) = parts.iter().find(|p| p.cols != cols) {
            return Err(Error::DimensionMismatch {
                op: "vstack",
                left: first.shape(),
                right: bad.shape(),
            });
        }
        let mut out = BitMatrix::zeros(parts.iter().map(|p| p.rows).sum(), cols);
        let mut off = 0;
        for p in parts {
            let s = out.stride;
            out.data[off * s..(off + p.rows) * s].copy_from_slice(&p.data);
            off += p.rows;
        }
        Ok(out)
    }

    /// Horizontal concatenation. An empty list yields a `0 x 0` matrix.
    pub fn hstack(parts: &[&BitMatrix]) -> Result<BitMatrix> {
        let Some(first) = parts.first() else {
            return Ok(BitMatrix::zeros(0, 0));
        };
        let rows = first.rows;
        if let Some(bad) = parts.iter().find(|p| p.rows != rows) {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                left: first.shape(),
                right: bad.shape(),
            });
        }
        let mut out = BitMatrix::zeros(rows, parts.iter().map(|p| p.cols).sum());
        let mut off = 0;
        for p in parts {
            out.or_block(0, off, p);
            off += p.cols;
        }
        Ok(out)
    }

    /// Reduced row echelon form of a copy of `self`.
    pub fn echelon(&self) -> EchelonForm {
        EchelonForm::new(self)
    }

    /// GF(2) rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        eliminate(&mut m, 0..self.cols, false).len()
    }

    /// A basis of `{v : self · v = 0}` with `cols - rank` vectors.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.cols);
                v.set(free, true);
                for (r, &p) in ech.pivots.iter().enumerate() {
                    if ech.reduced.get(r, free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `v` is a GF(2) combination of rows of `self`.
    pub fn in_row_space(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "in_row_space",
                left: self.shape(),
                right: (1, v.len()),
            });
        }
        Ok(self.echelon().contains(v))
    }
}

/// Gauss-Jordan elimination in place, visiting candidate pivot columns in
/// `order`. Returns the pivot columns; row `r` of the result carries pivot
/// `pivots[r]`. With `full`, pivots are cleared from every other row (RREF);
/// otherwise only rows below are cleared.
pub(crate) fn eliminate(
    m: &mut BitMatrix,
    order: impl IntoIterator<Item = usize>,
    full: bool,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in order {
        if r == m.rows {
            break;
        }
        let (w, bit) = (c / WORD_BITS, 1u64 << (c % WORD_BITS));
        let stride = m.stride;
        let Some(p) = (r..m.rows).find(|&i| m.data[i * stride + w] & bit != 0) else {
            continue;
        };
        m.swap_rows(r, p);
        let start = if full { 0 } else { r + 1 };
        for i in start..m.rows {
            if i != r && m.data[i * stride + w] & bit != 0 {
                m.xor_row_into(r, i);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form with the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct EchelonForm {
    reduced: BitMatrix,
    pivots: Vec<usize>,
}

impl EchelonForm {
    pub fn new(matrix: &BitMatrix) -> Self {
        let mut reduced = matrix.clone();
        let pivots = eliminate(&mut reduced, 0..matrix.cols, true);
        let rank = pivots.len();
        reduced.data.truncate(rank * reduced.stride);
        reduced.rows = rank;
        Self { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The nonzero rows of the reduced form.
    pub fn matrix(&self) -> &BitMatrix {
        &self.reduced
    }

    /// Residual of `v` after clearing every pivot position.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.reduced.cols, "length mismatch in reduce");
        let mut out = v.clone();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out.get(p) {
                for (d, w) in out.words.iter_mut().zip(self.reduced.row_words(r)) {
                    *d ^= w;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `false` when it was already in it.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let residual = self.reduce(v);
        let Some(pivot) = residual.iter_ones().next() else {
            return false;
        };
        for r in 0..self.reduced.rows {
            if self.reduced.get(r, pivot) {
                for (d, w) in self
                    .reduced
                    .row_words_mut(r)
                    .iter_mut()
                    .zip(residual.words())
                {
                    *d ^= w;
                }
            }
        }
        self.reduced.data.extend_from_slice(residual.words());
        self.reduced.rows += 1;
        self.pivots.push(pivot);
        true
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
