//! Plain-text edge lists.
//!
//! ```text
//! # comments start with '#'
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is `n m`; exactly `m` lines `u v` follow with
//! 0-based endpoints. Blank lines and trailing whitespace are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error as GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EdgeListError {
    /// The text does not follow the format.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Well-formed text describing an invalid graph.
    #[error("invalid graph: {0}")]
    Invalid(#[from] GraphError),
}

fn parse_error(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize), EdgeListError> {
    let mut fields = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize, EdgeListError> {
        let field = fields
            .next()
            .ok_or_else(|| parse_error(line_no, format!("missing {name} in {what}")))?;
        field
            .parse()
            .map_err(|_| parse_error(line_no, format!("{name} `{field}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_error(line_no, format!("extra fields in {what}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header, "header")?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_error(
                line_no,
                format!("more edge lines than the declared {m}"),
            ));
        }
        edges.push(parse_pair(line_no, line, "edge")?);
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
