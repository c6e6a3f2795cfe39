//! Text formats for groups.
//!
//! `.cay`: a `cayley <order>` header, `order` rows of `order` 0-based
//! indices, then optional `label <index> <text>` lines.
//!
//! `.perm`: a `perm <degree>` header followed by one generator per line in
//! disjoint-cycle notation, e.g. `(0 1 2)(3 4)`.
//!
//! In both, blank lines are ignored and `#` starts a comment line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::perm::{from_permutation_generators, parse_cycles};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] GroupError),
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

/// Whitespace-separated tokens with 1-based column numbers.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, tok)
    })
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<usize, FormatError> {
    let (ln, line) = lines
        .next()
        .ok_or_else(|| err(1, 1, format!("missing `{keyword} <n>` header")))?;
    let mut toks = tokens(line);
    match toks.next() {
        Some((_, k)) if k == keyword => {}
        Some((col, k)) => return Err(err(ln, col, format!("expected `{keyword}`, found {k:?}"))),
        None => return Err(err(ln, 1, "empty header")),
    }
    let (col, n) = toks
        .next()
        .ok_or_else(|| err(ln, line.len() + 1, format!("`{keyword}` needs a size")))?;
    let n: usize = n
        .parse()
        .map_err(|_| err(ln, col, format!("invalid size {n:?}")))?;
    if let Some((col, extra)) = toks.next() {
        return Err(err(ln, col, format!("unexpected {extra:?} after header")));
    }
    Ok(n)
}

pub fn parse_cayley(text: &str) -> Result<FiniteGroup, FormatError> {
    let mut lines = content_lines(text);
    let order = parse_header(&mut lines, "cayley")?;
    if order == 0 {
        return Err(FormatError::Invalid(GroupError::EmptyGroup));
    }
    if order > crate::group::MAX_REPRESENTABLE_ORDER {
        return Err(FormatError::Invalid(GroupError::OrderCapExceeded {
            order,
            cap: crate::group::MAX_REPRESENTABLE_ORDER,
        }));
    }
    let mut rows = Vec::with_capacity(order);
    let mut last_line = 1;
    for _ in 0..order {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, 1, format!("expected {order} table rows")))?;
        last_line = ln;
        let mut row = Vec::with_capacity(order);
        for (col, tok) in tokens(line) {
            let v: usize = tok
                .parse()
                .map_err(|_| err(ln, col, format!("invalid entry {tok:?}")))?;
            if v >= order {
                return Err(err(ln, col, format!("entry {v} outside [0, {order})")));
            }
            row.push(v);
        }
        if row.len() != order {
            return Err(err(
                ln,
                1,
                format!("row has {} entries, expected {order}", row.len()),
            ));
        }
        rows.push(row);
    }
    let mut labels: Option<Vec<String>> = None;
    for (ln, line) in lines {
        let mut toks = tokens(line);
        match toks.next() {
            Some((_, "label")) => {}
            Some((col, other)) => {
                return Err(err(ln, col, format!("expected `label`, found {other:?}")))
            }
            None => continue,
        }
        let (col, idx) = toks
            .next()
            .ok_or_else(|| err(ln, line.len() + 1, "label needs an index"))?;
        let idx: usize = idx
            .parse()
            .ok()
            .filter(|&i| i < order)
            .ok_or_else(|| err(ln, col, format!("invalid label index {idx:?}")))?;
        let text = match toks.next() {
            Some((c, _)) => line[c - 1..].trim().to_string(),
            None => return Err(err(ln, line.len() + 1, "label needs text")),
        };
        labels.get_or_insert_with(|| (0..order).map(|i| i.to_string()).collect())[idx] = text;
    }
    Ok(FiniteGroup::from_cayley_table_with_labels(
        order, &rows, labels,
    )?)
}

pub fn parse_perm(text: &str, cap: usize) -> Result<FiniteGroup, FormatError> {
    let mut lines = content_lines(text);
    let degree = parse_header(&mut lines, "perm")?;
    if degree == 0 {
        return Err(err(1, 1, "degree must be positive"));
    }
    let mut gens = Vec::new();
    for (ln, line) in lines {
        let col = line.len() - line.trim_start().len() + 1;
        let p = parse_cycles(line, degree).map_err(|m| err(ln, col, m))?;
        gens.push(p);
    }
    Ok(from_permutation_generators(degree, &gens, cap)?)
}

/// Dispatches on the header keyword.
pub fn parse_group(text: &str, cap: usize) -> Result<FiniteGroup, FormatError> {
    let first = content_lines(text)
        .next()
        .and_then(|(_, l)| l.split_whitespace().next());
    let g = match first {
        Some("cayley") => parse_cayley(text)?,
        Some("perm") => parse_perm(text, cap)?,
        Some(other) => {
            let (ln, _) = content_lines(text).next().expect("non-empty");
            return Err(err(ln, 1, format!("unknown format header {other:?}")));
        }
        None => return Err(err(1, 1, "empty input")),
    };
    if g.order() > cap {
        return Err(FormatError::Invalid(GroupError::OrderCapExceeded {
            order: g.order(),
            cap,
        }));
    }
    Ok(g)
}

/// Serializes to `.cay`. Label lines are written only when some label
/// differs from its decimal index.
pub fn write_cayley(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * n * 4 + 16);
    let _ = writeln!(out, "cayley {n}");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", g.mul(i, j));
        }
        out.push('\n');
    }
    if g.labels()
        .iter()
        .enumerate()
        .any(|(i, l)| *l != i.to_string())
    {
        for (i, l) in g.labels().iter().enumerate() {
            let _ = writeln!(out, "label {i} {l}");
        }
    }
    out
}
