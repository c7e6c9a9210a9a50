//! Plain-text interchange formats.
//!
//! * `ISG1` — a multiplication table: a header line with the order `n`,
//!   then `n` rows of `n` zero-based entries.
//! * `PBJ1` — partial-bijection generators: a header line with the degree
//!   `n`, then one line per generator with `n` tokens, each a one-based
//!   image or `-` for undefined.
//! * `CNG1` — a congruence or partition on one line: the class label of
//!   each element in order, labels numbered by first appearance.
//!
//! In all formats `#` starts a comment running to the end of the line and
//! blank lines are skipped.

use crate::congruence::Congruence;
use crate::partition::Partition;
use crate::semigroup::{GeneratorError, InverseSemigroup, PartialBijection, ValidationError};
use thiserror::Error;

/// A parse failure, pointing at the 1-based input line that caused it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        reason: reason.into(),
    }
}

/// The meaningful lines of the input: comments stripped, blanks dropped,
/// each with its original 1-based line number.
fn meaningful_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect()
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("{what} must be a non-negative integer, got `{token}`")))
}

/// Parse an `ISG1` multiplication table and validate it as an inverse
/// semigroup.
pub fn parse_isg1(text: &str) -> Result<InverseSemigroup, ParseError> {
    let lines = meaningful_lines(text);
    let Some((header_line, header)) = lines.first() else {
        return Err(syntax(1, "empty input: expected a header line with the order"));
    };
    if header.len() != 1 {
        return Err(syntax(
            *header_line,
            format!("header must be a single integer (the order), got {} tokens", header.len()),
        ));
    }
    let order = parse_usize(*header_line, header[0], "order")?;
    if order == 0 {
        return Err(syntax(*header_line, "order must be at least 1"));
    }
    let body = &lines[1..];
    if body.len() != order {
        return Err(syntax(
            body.first().map(|l| l.0).unwrap_or(*header_line),
            format!("expected {order} table rows, found {}", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(order);
    for (line_no, tokens) in body {
        if tokens.len() != order {
            return Err(syntax(
                *line_no,
                format!("expected {order} entries in this row, found {}", tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(order);
        for token in tokens {
            row.push(parse_usize(*line_no, token, "table entry")?);
        }
        rows.push(row);
    }
    Ok(InverseSemigroup::from_table(order, &rows)?)
}

/// Render a multiplication table as `ISG1`. Byte-deterministic: a fixed
/// single layout with single-space separators.
pub fn emit_isg1(s: &InverseSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for a in 0..s.order() {
        let row: Vec<String> = (0..s.order()).map(|b| s.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse `PBJ1` partial-bijection generators. Returns the degree and the
/// generator list; closing them into a semigroup is the caller's choice.
pub fn parse_pbj1(text: &str) -> Result<(usize, Vec<PartialBijection>), ParseError> {
    let lines = meaningful_lines(text);
    let Some((header_line, header)) = lines.first() else {
        return Err(syntax(1, "empty input: expected a header line with the degree"));
    };
    if header.len() != 1 {
        return Err(syntax(
            *header_line,
            format!("header must be a single integer (the degree), got {} tokens", header.len()),
        ));
    }
    let degree = parse_usize(*header_line, header[0], "degree")?;
    if degree == 0 {
        return Err(syntax(*header_line, "degree must be at least 1"));
    }
    let mut generators = Vec::new();
    for (line_no, tokens) in &lines[1..] {
        if tokens.len() != degree {
            return Err(syntax(
                *line_no,
                format!("expected {degree} image tokens in this generator, found {}", tokens.len()),
            ));
        }
        let mut images = Vec::with_capacity(degree);
        for token in tokens {
            if *token == "-" {
                images.push(None);
            } else {
                let v = parse_usize(*line_no, token, "image")?;
                if v == 0 || v > degree {
                    return Err(syntax(
                        *line_no,
                        format!("image must be `-` or in 1..={degree}, got `{token}`"),
                    ));
                }
                images.push(Some(v - 1));
            }
        }
        generators.push(PartialBijection::new(degree, images)?);
    }
    if generators.is_empty() {
        return Err(syntax(
            lines.last().map(|l| l.0).unwrap_or(*header_line),
            "expected at least one generator line after the header",
        ));
    }
    Ok((degree, generators))
}

/// Render a partition as `CNG1`: first-appearance class labels, one line.
pub fn emit_cng1_partition(p: &Partition) -> String {
    let labels: Vec<String> = (0..p.len()).map(|x| p.label_of(x).to_string()).collect();
    labels.join(" ")
}

/// Render a congruence as `CNG1`.
pub fn emit_cng1(c: &Congruence) -> String {
    emit_cng1_partition(c.partition())
}
