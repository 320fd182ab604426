//! Text format for codes and word lists.
//!
//! ```text
//! Z4CODE v1 n=2 rows=2 label=LRM(1,2)[...]
//! 11
//! 02
//! ```
//!
//! ASCII, LF line endings, no trailing whitespace. `label` is optional and
//! percent-escapes `%`, space, tab, CR and LF. Body rows hold one digit per
//! coordinate in original coordinate order.

use crate::codes::Z4Code;
use crate::error::{Error, Result};
use crate::linalg::GeneratorMatrix;
use crate::z4::{BitWord, Z4Word};

pub const MAGIC: &str = "Z4CODE";
pub const VERSION: &str = "v1";

fn escape(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for c in label.chars() {
        match c {
            '%' => out.push_str("%25"),
            ' ' => out.push_str("%20"),
            '\t' => out.push_str("%09"),
            '\n' => out.push_str("%0A"),
            '\r' => out.push_str("%0D"),
            _ => out.push(c),
        }
    }
    out
}

fn unescape(s: &str, line: usize, column: usize) -> Result<String> {
    let bytes = s.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = s
                .get(i + 1..i + 3)
                .and_then(|h| u8::from_str_radix(h, 16).ok())
                .ok_or_else(|| parse_error(line, column + i, "bad %-escape in label"))?;
            out.push(hex);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).map_err(|_| parse_error(line, column, "label is not UTF-8"))
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Serializes the generator rows of `c` as given.
pub fn render_code(c: &Z4Code) -> String {
    let rows = c.generators().rows();
    let mut out = format!("{MAGIC} {VERSION} n={} rows={}", c.n(), rows.len());
    if !c.label().is_empty() {
        out.push_str(" label=");
        out.push_str(&escape(c.label()));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// Inverse of [`render_code`]. Lines and columns in errors are 1-based.
pub fn parse_code(text: &str) -> Result<Z4Code> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    let mut fields = header.split(' ');
    if fields.next() != Some(MAGIC) {
        return Err(parse_error(1, 1, format!("expected {MAGIC} header")));
    }
    if fields.next() != Some(VERSION) {
        return Err(parse_error(
            1,
            MAGIC.len() + 2,
            format!("expected version {VERSION}"),
        ));
    }
    let (mut n, mut rows, mut label) = (None, None, None);
    let mut column = MAGIC.len() + VERSION.len() + 3;
    for field in fields {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_error(1, column, format!("expected key=value, got {field:?}")))?;
        let value_col = column + key.len() + 1;
        let number = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| parse_error(1, value_col, format!("bad number {v:?}")))
        };
        let slot_taken = match key {
            "n" => n.replace(number(value)?).is_some(),
            "rows" => rows.replace(number(value)?).is_some(),
            "label" => label.replace(unescape(value, 1, value_col)?).is_some(),
            _ => {
                return Err(parse_error(
                    1,
                    column,
                    format!("unknown header key {key:?}"),
                ))
            }
        };
        if slot_taken {
            return Err(parse_error(
                1,
                column,
                format!("duplicate header key {key:?}"),
            ));
        }
        column += field.len() + 1;
    }
    let n = n.ok_or_else(|| parse_error(1, 1, "missing n="))?;
    let count = rows.ok_or_else(|| parse_error(1, 1, "missing rows="))?;

    let mut body = Vec::with_capacity(count);
    for (i, line) in lines.by_ref().take(count).enumerate() {
        body.push(parse_row(line, n, i + 2)?);
    }
    if body.len() < count {
        return Err(parse_error(
            body.len() + 2,
            1,
            format!("expected {count} rows, found {}", body.len()),
        ));
    }
    // one optional final newline, nothing after it
    let rest: Vec<&str> = lines.collect();
    if rest.len() > 1 || rest.first().is_some_and(|l| !l.is_empty()) {
        return Err(parse_error(
            count + 2,
            1,
            "unexpected content after the body",
        ));
    }
    let gm = GeneratorMatrix::new(n, body)?;
    Ok(Z4Code::new(gm, label.unwrap_or_default()))
}

fn parse_row(line: &str, n: usize, line_no: usize) -> Result<Z4Word> {
    let mut symbols = Vec::with_capacity(n);
    for (col, c) in line.chars().enumerate() {
        match c {
            '0'..='3' => symbols.push(c as u8 - b'0'),
            _ => {
                return Err(parse_error(
                    line_no,
                    col + 1,
                    format!("bad symbol {c:?}, expected a digit 0-3"),
                ))
            }
        }
    }
    if symbols.len() != n {
        return Err(parse_error(
            line_no,
            symbols.len().min(n) + 1,
            format!("row has length {}, header says n={n}", symbols.len()),
        ));
    }
    Ok(Z4Word::from_symbols(&symbols).expect("digits checked"))
}

/// Quaternary digit strings, one per non-empty line.
pub fn parse_z4_words(text: &str) -> Result<Vec<Z4Word>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            l.parse().map_err(|e| match e {
                Error::BadChar { position, found } => parse_error(
                    i + 1,
                    position + 1,
                    format!("bad symbol {found:?}, expected a digit 0-3"),
                ),
                other => other,
            })
        })
        .collect()
}

/// Binary digit strings, one per non-empty line.
pub fn parse_bit_words(text: &str) -> Result<Vec<BitWord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            l.parse().map_err(|e| match e {
                Error::BadChar { position, found } => parse_error(
                    i + 1,
                    position + 1,
                    format!("bad bit {found:?}, expected 0 or 1"),
                ),
                other => other,
            })
        })
        .collect()
}
