//! The set text format: a `p n` header line, then one `x y` line per element.
//!
//! Blank lines and lines starting with `#` are ignored. Duplicate elements
//! and coordinates outside the group are rejected with their line number.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use fuglede_core::{Element, GroupParams, GroupSet};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, msg: msg.into() }
}

fn two_numbers(line: usize, text: &str) -> Result<(u64, u64), ParseError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<u64, ParseError> {
        let tok = it.next().ok_or_else(|| err(line, format!("missing {what}")))?;
        tok.parse().map_err(|_| err(line, format!("bad {what} {tok:?}")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if let Some(extra) = it.next() {
        return Err(err(line, format!("unexpected {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_set(text: &str) -> Result<GroupSet, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"p n\" header"))?;
    let (p, n) = two_numbers(hline, header)?;
    let p = u32::try_from(p).map_err(|_| err(hline, "p too large"))?;
    let n = u32::try_from(n).map_err(|_| err(hline, "n too large"))?;
    let params = GroupParams::new(p, n).map_err(|e| err(hline, e.to_string()))?;

    let mut set = GroupSet::empty(params);
    let mut first_seen: HashMap<Element, usize> = HashMap::new();
    for (line, text) in lines {
        let (x, y) = two_numbers(line, text)?;
        let e = params.element(x, y).map_err(|e| err(line, e.to_string()))?;
        if let Some(prev) = first_seen.insert(e, line) {
            return Err(err(line, format!("duplicate element {e} (first on line {prev})")));
        }
        set.insert(e);
    }
    Ok(set)
}

pub fn format_set(a: &GroupSet) -> String {
    let params = a.params();
    let mut out = format!("{} {}\n", params.p(), params.n());
    for e in a.iter() {
        let _ = writeln!(out, "{} {}", e.x, e.y);
    }
    out
}

pub fn read_set(path: &Path) -> Result<GroupSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    parse_set(&text).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

pub fn write_set(path: &Path, a: &GroupSet) -> Result<(), CliError> {
    std::fs::write(path, format_set(a)).map_err(|source| CliError::Io { path: path.to_owned(), source })
}
