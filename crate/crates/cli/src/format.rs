//! The matrix file format and input resolution.
//!
//! A matrix file is a header line `z4 n=<n> rows=<m>` followed by `m` lines
//! of `n` digits from {0,1,2,3} with no separators. Lines starting with `#`
//! are comments and may appear anywhere. `parse(render(M)) = M` for every
//! matrix.

use std::fmt;
use std::fs;
use std::path::Path;

use z4codes_core::z4::{Z4Matrix, Z4Vector};

/// Parse failure with its position in the input.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Parse a matrix file.
pub fn parse_matrix_file(text: &str) -> Result<Z4Matrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_no, header) =
        lines.next().ok_or_else(|| err(1, 1, "empty input, expected `z4 n=<n> rows=<m>`"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let bad_header =
        |msg: &str| err(header_no + 1, 1, format!("{msg} (expected `z4 n=<n> rows=<m>`)"));
    if parts.len() != 3 || parts[0] != "z4" {
        return Err(bad_header("malformed header"));
    }
    let n: usize = parts[1]
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad_header("malformed n field"))?;
    let m: usize = parts[2]
        .strip_prefix("rows=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad_header("malformed rows field"))?;
    if n == 0 || m == 0 {
        return Err(bad_header("n and rows must be positive"));
    }

    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(header_no + 1, 1, format!("expected {m} digit rows")))?;
        let line = line.trim();
        let mut digits = Vec::with_capacity(n);
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0'..='3' => digits.push(ch as u8 - b'0'),
                _ => {
                    return Err(err(
                        line_no + 1,
                        col + 1,
                        format!("invalid digit {ch:?}, expected 0-3"),
                    ))
                }
            }
        }
        if digits.len() != n {
            return Err(err(
                line_no + 1,
                line.chars().count() + 1,
                format!("row has {} digits, expected {n}", digits.len()),
            ));
        }
        rows.push(Z4Vector::from_digits(&digits).expect("digits validated"));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(err(line_no + 1, 1, "trailing content after the last row"));
    }
    Z4Matrix::from_rows(rows).map_err(|e| err(header_no + 1, 1, e.to_string()))
}

/// Render a matrix in the file format.
pub fn render_matrix_file(g: &Z4Matrix) -> String {
    let mut s = format!("z4 n={} rows={}\n", g.n(), g.m());
    s.push_str(&g.render_grid());
    s
}

/// Resolve an input argument: `catalog:<name>` or a file path.
pub fn load_input(input: &str) -> anyhow::Result<Z4Matrix> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return Ok(z4codes_core::catalog::get(name)?.matrix);
    }
    let text = fs::read_to_string(Path::new(input))
        .map_err(|e| anyhow::anyhow!("cannot read {input}: {e}"))?;
    parse_matrix_file(&text).map_err(|e| anyhow::anyhow!("{input}: {e}"))
}
