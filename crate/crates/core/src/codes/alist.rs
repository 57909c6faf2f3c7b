//! The alist sparse parity-check format.
//!
//! ```text
//! n m                 columns (bits) and rows (checks)
//! dc dr               largest column and row degree
//! c_1 ... c_n         column degrees
//! r_1 ... r_m         row degrees
//! <n lines>           1-based row indices of each column
//! <m lines>           1-based column indices of each row
//! ```
//!
//! Adjacency lines may be padded with trailing zeros up to the maximum
//! degree. Emission is canonical: sorted indices, no padding, single spaces
//! and a trailing newline.

use std::fmt::Write as _;

use super::ClassicalCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        format: "alist",
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        let Some((idx, text)) = self.inner.next() else {
            return Err(parse_err(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            ));
        };
        let line = idx + 1;
        self.last = line;
        let nums = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("'{tok}' is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((line, nums))
    }

    fn next_exact(&mut self, count: usize, what: &str) -> Result<(usize, Vec<usize>)> {
        let (line, nums) = self.next_numbers(what)?;
        if nums.len() != count {
            return Err(parse_err(
                line,
                format!("expected {count} entries for {what}, found {}", nums.len()),
            ));
        }
        Ok((line, nums))
    }
}

/// Reads one adjacency line: exactly `degree` indices in `1..=bound`,
/// optionally followed by zero padding.
fn adjacency(
    lines: &mut Lines<'_>,
    degree: usize,
    bound: usize,
    what: &str,
) -> Result<(usize, Vec<usize>)> {
    let (line, nums) = lines.next_numbers(what)?;
    if nums.len() < degree {
        return Err(parse_err(
            line,
            format!(
                "{what} declares degree {degree} but lists {} entries",
                nums.len()
            ),
        ));
    }
    let (entries, padding) = nums.split_at(degree);
    if let Some(&bad) = padding.iter().find(|&&x| x != 0) {
        return Err(parse_err(
            line,
            format!("{what} declares degree {degree} but has extra entry {bad}"),
        ));
    }
    let mut out = Vec::with_capacity(degree);
    for &x in entries {
        if x == 0 || x > bound {
            return Err(parse_err(
                line,
                format!("index {x} out of range 1..={bound}"),
            ));
        }
        out.push(x - 1);
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != out.len() {
        return Err(parse_err(line, format!("{what} repeats an index")));
    }
    Ok((line, out))
}

/// Parses an alist document into a code named `name`.
pub fn parse_alist(name: &str, text: &str) -> Result<ClassicalCode> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let (_, header) = lines.next_exact(2, "header 'n m'")?;
    let (n, m) = (header[0], header[1]);
    let (line2, maxima) = lines.next_exact(2, "maximum degrees")?;
    let (line3, col_deg) = lines.next_exact(n, "column degrees")?;
    let (line4, row_deg) = lines.next_exact(m, "row degrees")?;
    if col_deg.iter().copied().max().unwrap_or(0) != maxima[0] {
        return Err(parse_err(
            line2,
            "maximum column degree disagrees with the column degrees",
        ));
    }
    if row_deg.iter().copied().max().unwrap_or(0) != maxima[1] {
        return Err(parse_err(
            line2,
            "maximum row degree disagrees with the row degrees",
        ));
    }
    if col_deg.iter().sum::<usize>() != row_deg.iter().sum::<usize>() {
        return Err(parse_err(
            line4,
            "column and row degrees have different totals",
        ));
    }
    if let Some(j) = col_deg.iter().position(|&d| d > m) {
        return Err(parse_err(
            line3,
            format!("column {} has degree above {m}", j + 1),
        ));
    }
    if let Some(i) = row_deg.iter().position(|&d| d > n) {
        return Err(parse_err(
            line4,
            format!("row {} has degree above {n}", i + 1),
        ));
    }

    let mut h = BitMatrix::zeros(m, n);
    for (j, &deg) in col_deg.iter().enumerate() {
        let (_, rows) = adjacency(&mut lines, deg, m, &format!("column {}", j + 1))?;
        for i in rows {
            h.set(i, j, true);
        }
    }
    for (i, &deg) in row_deg.iter().enumerate() {
        let (line, cols) = adjacency(&mut lines, deg, n, &format!("row {}", i + 1))?;
        let mut listed = cols;
        listed.sort_unstable();
        if listed != h.row_support(i) {
            return Err(parse_err(
                line,
                format!("row {} disagrees with the column adjacency lists", i + 1),
            ));
        }
    }
    for (idx, rest) in lines.inner {
        if !rest.trim().is_empty() {
            return Err(parse_err(
                idx + 1,
                "trailing content after the last row list",
            ));
        }
    }
    ClassicalCode::new(name, h).map_err(|e| parse_err(1, e.to_string()))
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    let mut s = String::new();
    for (k, x) in items.into_iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x}");
    }
    s
}

/// Canonical alist text for an arbitrary matrix.
pub fn matrix_to_alist(h: &BitMatrix) -> String {
    let t = h.transpose();
    let cols: Vec<Vec<usize>> = (0..h.cols()).map(|j| t.row_support(j)).collect();
    let rows: Vec<Vec<usize>> = (0..h.rows()).map(|i| h.row_support(i)).collect();
    let max_c = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_r = rows.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.cols(), h.rows());
    let _ = writeln!(out, "{max_c} {max_r}");
    let _ = writeln!(out, "{}", join(cols.iter().map(Vec::len)));
    let _ = writeln!(out, "{}", join(rows.iter().map(Vec::len)));
    for c in &cols {
        let _ = writeln!(out, "{}", join(c.iter().map(|i| i + 1)));
    }
    for r in &rows {
        let _ = writeln!(out, "{}", join(r.iter().map(|j| j + 1)));
    }
    out
}

/// Canonical alist text for a classical code.
pub fn emit_alist(code: &ClassicalCode) -> String {
    matrix_to_alist(code.h())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{random_ldpc, repetition_code};
    use proptest::prelude::*;

    #[test]
    fn repetition_round_trip() {
        let code = repetition_code(3).unwrap();
        let text = emit_alist(&code);
        assert_eq!(
            text,
            "3 3\n2 2\n2 2 2\n2 2 2\n1 3\n1 2\n2 3\n1 2\n2 3\n1 3\n"
        );
        let back = parse_alist("r", &text).unwrap();
        assert_eq!(back.h(), code.h());
        assert_eq!(emit_alist(&back), text);
    }

    #[test]
    fn one_by_one() {
        let code = parse_alist("one", "1 1\n1 1\n1\n1\n1\n1\n").unwrap();
        assert_eq!(code.h(), &BitMatrix::from_rows(&[[1]]));
    }

    #[test]
    fn zero_padding_accepted() {
        // MacKay-style padding to the maximum degree
        let text = "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n";
        let code = parse_alist("padded", text).unwrap();
        assert_eq!(code.h(), &BitMatrix::from_rows(&[[1, 1, 0], [0, 1, 1]]));
        assert_eq!(
            emit_alist(&code),
            "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n"
        );
    }

    #[test]
    fn degree_mismatch_reports_line() {
        // column 2 declares degree 2 but lists one entry
        let text = "3 2\n2 2\n1 2 1\n2 2\n1\n1\n2\n1 2\n2 3\n";
        match parse_alist("bad", text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("", 1),
            ("3\n", 1),
            ("2 1\n1 2\n1 1\n2\n1\n1\n1 3\n", 7),
            ("2 1\n1 2\n1 1\n2\n1\n1\n1 x\n", 7),
            ("2 1\n1 3\n1 1\n2\n1\n1\n1 2\n", 2),
            ("2 1\n1 2\n1 1\n2\n1\n1\n1 2\nextra\n", 8),
            ("2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n", 7),
        ];
        for (text, want) in cases {
            match parse_alist("bad", text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "input {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn edge_shapes_round_trip() {
        let shapes = [
            BitMatrix::from_rows(&[[1, 0, 1, 1, 0]]),
            BitMatrix::from_rows(&[[1], [0], [1]]),
            BitMatrix::zeros(2, 3),
            BitMatrix::zeros(0, 4),
        ];
        for h in shapes {
            let text = matrix_to_alist(&h);
            let back = parse_alist("edge", &text).unwrap();
            assert_eq!(back.h(), &h);
            assert_eq!(matrix_to_alist(back.h()), text);
        }
    }

    proptest! {
        #[test]
        fn ldpc_round_trip(rows in 1usize..12, cols in 1usize..12, w in 1usize..12, seed in any::<u64>()) {
            let w = w.min(cols);
            let code = random_ldpc(rows, cols, w, seed).unwrap();
            let text = emit_alist(&code);
            let back = parse_alist("p", &text).unwrap();
            prop_assert_eq!(back.h(), code.h());
            prop_assert_eq!(emit_alist(&back), text);
        }
    }
}
