//! Plain-text signed graph files.
//!
//! ```text
//! # comment
//! sg 3
//! e 1 2 +
//! e 2 3 -
//! ```
//!
//! Vertices are 1-indexed in files and 0-indexed in memory.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph};
use crate::products::{ProductLayout, Slot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `sg <n>` header")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    BadHeader(String),
    #[error("malformed edge line `{0}`")]
    BadEdge(String),
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("bad sign `{0}` (expected + or -)")]
    BadSign(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn fail<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let Some(n) = order else {
            match tokens.as_slice() {
                ["sg", n] => match n.parse() {
                    Ok(n) => {
                        order = Some(n);
                        continue;
                    }
                    Err(_) => return fail(line, ParseErrorKind::BadHeader(body.to_string())),
                },
                ["sg", ..] => return fail(line, ParseErrorKind::BadHeader(body.to_string())),
                _ => return fail(line, ParseErrorKind::MissingHeader),
            }
        };
        match tokens.as_slice() {
            ["e", u, v, s] => {
                let (Ok(u), Ok(v)) = (u.parse::<usize>(), v.parse::<usize>()) else {
                    return fail(line, ParseErrorKind::BadEdge(body.to_string()));
                };
                for x in [u, v] {
                    if x == 0 || x > n {
                        return fail(line, ParseErrorKind::VertexOutOfRange { vertex: x, order: n });
                    }
                }
                if u == v {
                    return fail(line, ParseErrorKind::Loop(u));
                }
                let sign = match *s {
                    "+" => Sign::Pos,
                    "-" => Sign::Neg,
                    other => return fail(line, ParseErrorKind::BadSign(other.to_string())),
                };
                if !seen.insert((u.min(v), u.max(v))) {
                    return fail(line, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v)));
                }
                edges.push((u - 1, v - 1, sign));
            }
            ["e", ..] => return fail(line, ParseErrorKind::BadEdge(body.to_string())),
            ["sg", ..] => return fail(line, ParseErrorKind::BadHeader(body.to_string())),
            _ => return fail(line, ParseErrorKind::UnknownRecord(body.to_string())),
        }
    }
    let Some(n) = order else {
        return fail(last.max(1), ParseErrorKind::MissingHeader);
    };
    Ok(SignedGraph::new(n, edges).expect("edges validated while parsing"))
}

/// Canonical file text: header, then edges sorted by `(u, v)` with `u < v`.
pub fn write_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.order());
    for (u, v, s) in g.edges() {
        writeln!(out, "e {} {} {}", u + 1, v + 1, s).unwrap();
    }
    out
}

/// Product file followed by `# layout` lines naming every vertex:
/// `u i`, `a i` and `v j i` (vertex `j` of copy `i`), all 1-indexed.
pub fn write_product(g: &SignedGraph, layout: &ProductLayout) -> String {
    let mut out = write_graph(g);
    for index in 0..layout.order() {
        let name = match layout.slot(index) {
            Slot::Original(i) => format!("u {}", i + 1),
            Slot::Duplicate(i) => format!("a {}", i + 1),
            Slot::Copy { copy, vertex } => format!("v {} {}", vertex + 1, copy + 1),
        };
        writeln!(out, "# layout {name} -> {}", index + 1).unwrap();
    }
    out
}
