//! Matrix text and JSON formats.
//!
//! Text: a header line `m n`, then `m` lines of `n` whitespace-separated entries, each
//! `p` or `p/q` with `q > 0`. Blank lines are ignored. Writers emit lowest terms.
//!
//! JSON: `{"entries": [[...], ...]}` where each entry is an integer or a string in the
//! text-format syntax.

use std::fmt;

use serde_json::Value;

use crate::matrix::Matrix;
use crate::rational::{parse_rational, Rational};

/// A parse failure with a 1-based source location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(b, t)| (line[..b].chars().count() + 1, t))
        .collect()
}

fn parse_entry(token: &str, line: usize, column: usize) -> Result<Rational, ParseError> {
    parse_rational(token).ok_or_else(|| {
        let zero_den = token
            .split_once('/')
            .is_some_and(|(_, q)| !q.is_empty() && q.bytes().all(|b| b == b'0'));
        if zero_den {
            ParseError::new(line, column, format!("zero denominator in '{token}'"))
        } else {
            ParseError::new(line, column, format!("invalid rational '{token}'"))
        }
    })
}

fn parse_dimension(
    token: &str,
    line: usize,
    column: usize,
    what: &str,
) -> Result<usize, ParseError> {
    match token.parse::<usize>() {
        Ok(v) if v > 0 && token.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
        _ => Err(ParseError::new(
            line,
            column,
            format!("malformed header: {what} must be a positive integer, got '{token}'"),
        )),
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "malformed header: empty input"))?;
    let head = tokens(header);
    if head.len() != 2 {
        let col = head.get(2).map_or(1, |t| t.0);
        return Err(ParseError::new(
            hline,
            col,
            format!(
                "malformed header: expected 'm n', found {} tokens",
                head.len()
            ),
        ));
    }
    let m = parse_dimension(head[0].1, hline, head[0].0, "row count")?;
    let n = parse_dimension(head[1].1, hline, head[1].0, "column count")?;

    let mut rows = Vec::with_capacity(m);
    let mut last_line = hline;
    for row in 1..=m {
        let Some((ln, line)) = lines.next() else {
            return Err(ParseError::new(
                last_line + 1,
                1,
                format!("expected {m} rows, found {}", row - 1),
            ));
        };
        last_line = ln;
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
            let noun = if toks.len() == 1 { "token" } else { "tokens" };
            return Err(ParseError::new(
                ln,
                col,
                format!("row {row} has {} {noun}, expected {n}", toks.len()),
            ));
        }
        let entries = toks
            .into_iter()
            .map(|(col, t)| parse_entry(t, ln, col))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(entries);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(
            ln,
            1,
            format!("unexpected content after {m} rows"),
        ));
    }
    Ok(Matrix::from_rows(rows).expect("shape checked while parsing"))
}

/// The text format; identical to the `Display` impl of [`Matrix`].
pub fn format_matrix(x: &Matrix) -> String {
    x.to_string()
}

pub fn parse_matrix_json(text: &str) -> Result<Matrix, ParseError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    let fail = |msg: String| ParseError::new(1, 1, msg);
    let rows = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| fail("expected an object with an \"entries\" array".into()))?;
    if rows.is_empty() {
        return Err(fail("\"entries\" must contain at least one row".into()));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| fail(format!("row {} is not an array", i + 1)))?;
        let mut entries = Vec::with_capacity(row.len());
        for (j, v) in row.iter().enumerate() {
            let token = match v {
                Value::String(s) => s.clone(),
                Value::Number(num) if num.is_i64() || num.is_u64() => num.to_string(),
                _ => {
                    return Err(fail(format!(
                        "entry ({},{}) must be an integer or a string",
                        i + 1,
                        j + 1
                    )))
                }
            };
            let x = parse_rational(&token).ok_or_else(|| {
                fail(format!(
                    "entry ({},{}) is not a rational: '{token}'",
                    i + 1,
                    j + 1
                ))
            })?;
            entries.push(x);
        }
        if entries.is_empty() {
            return Err(fail(format!("row {} is empty", i + 1)));
        }
        if entries.len() != out.first().map_or(entries.len(), Vec::len) {
            return Err(fail(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                entries.len(),
                out[0].len()
            )));
        }
        out.push(entries);
    }
    Ok(Matrix::from_rows(out).expect("shape checked while parsing"))
}

pub fn format_matrix_json(x: &Matrix) -> String {
    let rows: Vec<Value> = (1..=x.rows())
        .map(|i| {
            Value::Array(
                x.row(i)
                    .iter()
                    .map(|v| Value::String(v.to_string()))
                    .collect(),
            )
        })
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("entries".into(), Value::Array(rows));
    Value::Object(obj).to_string()
}
