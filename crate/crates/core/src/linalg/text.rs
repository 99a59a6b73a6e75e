//! Plain-text matrices: a `rows cols` line, then row-major `p/q` tokens
//! (`p` alone for integers), whitespace separated.

use std::fmt::Write;

use super::{LinalgError, Rational, RationalMatrix};

pub fn parse_matrix_text(text: &str) -> Result<RationalMatrix, LinalgError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(LinalgError::Parse { line: 1, reason: "empty input".into() })?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<Result<_, _>>()
        .map_err(|e| LinalgError::Parse { line: hline + 1, reason: format!("bad dimension: {e}") })?;
    let [rows, cols] = dims[..] else {
        return Err(LinalgError::Parse { line: hline + 1, reason: "header must be `rows cols`".into() });
    };
    let mut data = Vec::with_capacity(rows * cols);
    let mut last_line = hline + 1;
    for (i, line) in lines {
        last_line = i + 1;
        for tok in line.split_whitespace() {
            let v: Rational = tok
                .parse()
                .map_err(|e| LinalgError::Parse { line: i + 1, reason: format!("bad entry {tok:?}: {e}") })?;
            data.push(v);
        }
    }
    if data.len() != rows * cols {
        return Err(LinalgError::Parse {
            line: last_line,
            reason: format!("expected {} entries, found {}", rows * cols, data.len()),
        });
    }
    let mut it = data.into_iter();
    Ok(RationalMatrix::from_fn(rows, cols, |_, _| it.next().unwrap()))
}

pub fn emit_matrix_text(m: &RationalMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
