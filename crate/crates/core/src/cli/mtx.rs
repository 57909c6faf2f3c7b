//! MatrixMarket `coordinate pattern general`, 1-based, row-major entries.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

const BANNER: &str = "%%MatrixMarket matrix coordinate pattern general";

pub fn write_mtx(h: &BitMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{BANNER}");
    let _ = writeln!(out, "{} {} {}", h.rows(), h.cols(), h.count_ones());
    for i in 0..h.rows() {
        for j in h.row_support(i) {
            let _ = writeln!(out, "{} {}", i + 1, j + 1);
        }
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        format: "MatrixMarket",
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str, want: usize) -> Result<Vec<usize>> {
    let v: Vec<usize> = text
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| err(line, format!("'{t}' is not a nonnegative integer")))
        })
        .collect::<Result<_>>()?;
    if v.len() != want {
        return Err(err(
            line,
            format!("expected {want} integers, found {}", v.len()),
        ));
    }
    Ok(v)
}

/// Reads a pattern matrix. Duplicate entries are rejected rather than
/// summed mod 2.
pub fn parse_mtx(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, banner) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let banner_words: Vec<String> = banner
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if banner_words
        != [
            "%%matrixmarket",
            "matrix",
            "coordinate",
            "pattern",
            "general",
        ]
    {
        return Err(err(1, format!("expected '{BANNER}'")));
    }
    let mut body = lines.filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('%'));
    let (size_line, size) = body.next().ok_or_else(|| err(2, "missing size line"))?;
    let [rows, cols, nnz] = numbers(size_line, size, 3)?[..] else {
        unreachable!()
    };
    let mut h = BitMatrix::zeros(rows, cols);
    let mut seen = 0;
    for (line, entry) in body {
        let [i, j] = numbers(line, entry, 2)?[..] else {
            unreachable!()
        };
        if !(1..=rows).contains(&i) || !(1..=cols).contains(&j) {
            return Err(err(
                line,
                format!("entry ({i}, {j}) outside {rows} x {cols}"),
            ));
        }
        if h.get(i - 1, j - 1) {
            return Err(err(line, format!("duplicate entry ({i}, {j})")));
        }
        h.set(i - 1, j - 1, true);
        seen += 1;
    }
    if seen != nnz {
        return Err(err(
            size_line,
            format!("declared {nnz} entries, found {seen}"),
        ));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_matrix_text() {
        let h = BitMatrix::from_rows(&[[1, 0, 1], [0, 1, 0]]);
        let text = write_mtx(&h);
        assert_eq!(text, format!("{BANNER}\n2 3 3\n1 1\n1 3\n2 2\n"));
        assert_eq!(parse_mtx(&text).unwrap(), h);
    }

    #[test]
    fn malformed() {
        let cases = [
            ("", 1),
            (
                "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1\n",
                1,
            ),
            (&format!("{BANNER}\n2 2\n"), 2),
            (&format!("{BANNER}\n2 2 1\n3 1\n"), 3),
            (&format!("{BANNER}\n2 2 2\n1 1\n1 1\n"), 4),
            (&format!("{BANNER}\n% comment\n2 2 2\n1 1\n"), 3),
            (&format!("{BANNER}\n2 2 1\n1 x\n"), 3),
        ];
        for (text, line) in cases {
            match parse_mtx(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(rows in 0usize..6, cols in 1usize..70, seed: u64) {
            let mut h = BitMatrix::zeros(rows, cols);
            let mut s = seed;
            for i in 0..rows {
                for j in 0..cols {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    h.set(i, j, s >> 62 == 0);
                }
            }
            prop_assert_eq!(parse_mtx(&write_mtx(&h)).unwrap(), h);
        }
    }
}
