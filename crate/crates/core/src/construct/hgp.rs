use crate::codes::ClassicalCode;
use crate::gf2::BitMatrix;

/// The hypergraph product of two classical codes, built directly.
///
/// With `H1: m1 x n1` and `H2: m2 x n2`, qubits are ordered `n1*n2` then
/// `m1*m2`, and
///
/// ```text
/// hx = [ H1 (x) I_n2 | I_m1 (x) H2^T ]
/// hz = [ I_n1 (x) H2 | H1^T (x) I_m2 ]
/// ```
///
/// which is the block order the general assembly uses for the D = 2 seed `BC`.
pub fn hgp_reference(c1: &ClassicalCode, c2: &ClassicalCode) -> (BitMatrix, BitMatrix) {
    let (h1, h2) = (c1.h(), c2.h());
    let (m1, n1) = h1.shape();
    let (m2, n2) = h2.shape();
    let hx = BitMatrix::hstack(&[
        &h1.kron(&BitMatrix::identity(n2)),
        &BitMatrix::identity(m1).kron(&h2.transpose()),
    ])
    .expect("row counts agree by construction");
    let hz = BitMatrix::hstack(&[
        &BitMatrix::identity(n1).kron(h2),
        &h1.transpose().kron(&BitMatrix::identity(m2)),
    ])
    .expect("row counts agree by construction");
    (hx, hz)
}
