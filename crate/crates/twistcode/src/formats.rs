//! External matrix formats.
//!
//! Text format (canonical on write, lenient on read):
//!
//! ```text
//! q rows [cols]        # cols defaults to rows
//! e e e ... e          # one line per row, entries as integer codes in [0, q)
//! ```
//!
//! Blank lines and `#` comments are skipped on read.  The JSON mirror is
//! `{"q": …, "rows": …, "cols": …, "entries": [[…], …]}`.  Element codes are
//! the packed base-p digit encoding documented in the field module (for
//! prime fields, plain residues `0..p`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Mat, VecN};

/// JSON mirror of the matrix text format.
#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub q: u64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u64>>,
}

fn parse_token<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found {tok:?}"),
    })
}

/// Parse the text format.  Line numbers in errors are 1-based and refer to
/// the original input, counting skipped lines.
pub fn parse_matrix_text(src: &str) -> Result<Mat> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse { line: 1, msg: "empty matrix file".into() });
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 && toks.len() != 3 {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header must be `q rows [cols]`, found {} token(s)", toks.len()),
        });
    }
    let q: u64 = parse_token(toks[0], header_line, "field order q")?;
    let rows: usize = parse_token(toks[1], header_line, "row count")?;
    let cols: usize =
        if toks.len() == 3 { parse_token(toks[2], header_line, "column count")? } else { rows };
    if rows == 0 || cols == 0 {
        return Err(Error::Parse { line: header_line, msg: "matrix dimensions must be positive".into() });
    }
    let field = Field::of_order(q)?;

    let mut codes = Vec::with_capacity(rows * cols);
    let mut last_line = header_line;
    for r in 0..rows {
        let Some((line, text)) = lines.next() else {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("expected {rows} data row(s), found {r}"),
            });
        };
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != cols {
            return Err(Error::Parse {
                line,
                msg: format!("expected {cols} entries, found {}", toks.len()),
            });
        }
        for tok in toks {
            let code: u64 = parse_token(tok, line, "field element code")?;
            if field.elt(code).is_err() {
                return Err(Error::Parse {
                    line,
                    msg: format!("{code} is not an element code of {field}"),
                });
            }
            codes.push(code);
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: "unexpected content after last row".into() });
    }
    Mat::from_codes(&field, rows, cols, &codes)
}

/// Canonical text form: `q n` header for square matrices, `q rows cols`
/// otherwise, one space-separated line per row, trailing newline.
pub fn write_matrix_text(m: &Mat) -> String {
    let mut out = if m.rows() == m.cols() {
        format!("{} {}\n", m.field().order(), m.rows())
    } else {
        format!("{} {} {}\n", m.field().order(), m.rows(), m.cols())
    };
    for row in m.row_codes() {
        let toks: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix_json(src: &str) -> Result<Mat> {
    let mj: MatrixJson = serde_json::from_str(src)?;
    let field = Field::of_order(mj.q)?;
    if mj.entries.len() != mj.rows || mj.entries.iter().any(|r| r.len() != mj.cols) {
        return Err(Error::Parse {
            line: 1,
            msg: format!("entries do not form a {}x{} array", mj.rows, mj.cols),
        });
    }
    Mat::from_rows(&field, &mj.entries)
}

pub fn write_matrix_json(m: &Mat) -> String {
    let mj = MatrixJson {
        q: m.field().order(),
        rows: m.rows(),
        cols: m.cols(),
        entries: m.row_codes(),
    };
    let mut s = serde_json::to_string_pretty(&mj).expect("serializable");
    s.push('\n');
    s
}

/// Parse either format, sniffing JSON by a leading `{`.
pub fn parse_matrix_auto(src: &str) -> Result<Mat> {
    if src.trim_start().starts_with('{') {
        parse_matrix_json(src)
    } else {
        parse_matrix_text(src)
    }
}

pub fn read_matrix_file(path: &std::path::Path) -> Result<Mat> {
    let src = std::fs::read_to_string(path)?;
    parse_matrix_auto(&src)
}

/// A message file is the text format with a single row (`q 1 k` header).
pub fn parse_message_text(src: &str) -> Result<VecN> {
    let m = parse_matrix_text(src)?;
    if m.rows() != 1 {
        return Err(Error::Parse {
            line: 1,
            msg: format!("message file must have exactly one row, found {}", m.rows()),
        });
    }
    Ok(VecN::from_elts(m.field(), m.entries().to_vec()))
}

pub fn write_message_text(v: &VecN) -> String {
    let mut out = format!("{} 1 {}\n", v.field().order(), v.len());
    let toks: Vec<String> = v.codes().iter().map(u64::to_string).collect();
    out.push_str(&toks.join(" "));
    out.push('\n');
    out
}
