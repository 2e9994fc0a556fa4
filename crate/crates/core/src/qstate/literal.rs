//! Text format for complex matrices.
//!
//! An entry is `a`, `bi`, `a+bi` or `a-bi`, where `a` and `b` are decimal
//! floats (exponents allowed, e.g. `1e-3-2.5i`). A bare `i` or `-i` means
//! `±1i`. No spaces inside an entry.
//!
//! A matrix file holds the dimension on the first line, then one line per
//! row with entries separated by whitespace or commas. Blank lines and text
//! after `#` are ignored.
//!
//! ```text
//! # |+><+|
//! 2
//! 0.5 0.5
//! 0.5 0.5
//! ```

use std::path::Path;

use super::matrix::{ComplexMatrix, C64};
use crate::{Error, Result};

fn parse_float(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => s.parse::<f64>().ok(),
    }
}

/// Parses one entry; `line` is only used in error messages.
fn parse_entry(s: &str, line: usize) -> Result<C64> {
    let bad = || Error::parse(line, format!("invalid complex literal `{s}`"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            let im = parse_float(&body[k..]).ok_or_else(bad)?;
            Ok(C64::new(re, im))
        }
        None => parse_float(body).map(|im| C64::new(0.0, im)).ok_or_else(bad),
    }
}

pub fn parse_complex(s: &str) -> Result<C64> {
    parse_entry(s, 0)
}

pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or_else(|| Error::parse(0, "missing dimension line"))?;
    let dim: usize = header.parse().map_err(|_| Error::parse(line, format!("invalid dimension `{header}`")))?;
    if dim == 0 {
        return Err(Error::parse(line, "dimension must be positive"));
    }
    let mut rows = Vec::with_capacity(dim);
    for (line, text) in lines {
        let row = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| parse_entry(t, line))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != dim {
            return Err(Error::parse(line, format!("expected {dim} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != dim {
        return Err(Error::parse(0, format!("expected {dim} rows, found {}", rows.len())));
    }
    ComplexMatrix::from_rows(&rows)
}

pub fn format_matrix(m: &ComplexMatrix) -> String {
    let mut out = format!("{}\n", m.dim());
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| format_complex(m.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    parse_matrix(&std::fs::read_to_string(path)?)
}
