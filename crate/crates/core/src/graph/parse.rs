use thiserror::Error;

use super::{GraphError, WeightedGraph};
use crate::rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 when the input is empty or not UTF-8.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("negative weight on edge {0}-{1}")]
    NegativeWeight(usize, usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
}

impl From<GraphError> for ParseErrorKind {
    fn from(err: GraphError) -> Self {
        match err {
            GraphError::Loop(v) => ParseErrorKind::Loop(v),
            GraphError::DuplicateEdge(u, v) => ParseErrorKind::DuplicateEdge(u, v),
            GraphError::NegativeWeight(u, v) => ParseErrorKind::NegativeWeight(u, v),
            GraphError::IsolatedVertex(v) => ParseErrorKind::IsolatedVertex(v),
            GraphError::VertexOutOfRange {
                vertex,
                vertex_count,
            } => ParseErrorKind::VertexOutOfRange {
                vertex,
                vertex_count,
            },
            other => ParseErrorKind::Malformed(other.to_string()),
        }
    }
}

fn malformed(line: usize, what: impl Into<String>) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::Malformed(what.into()),
    }
}

/// Reads the text graph format: an `n m` header followed by `m` lines of
/// `u v w`, where `w` is a nonnegative integer or `p/q`. Lines starting with
/// `#` and blank lines are skipped.
pub fn parse_graph(input: &[u8]) -> Result<WeightedGraph, ParseError> {
    let text = std::str::from_utf8(input).map_err(|_| malformed(0, "input is not valid UTF-8"))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| malformed(0, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(malformed(header_line, "header must be `n m`"));
    };
    let n: usize = n
        .parse()
        .map_err(|_| malformed(header_line, format!("bad vertex count `{n}`")))?;
    let m: usize = m
        .parse()
        .map_err(|_| malformed(header_line, format!("bad edge count `{m}`")))?;

    let mut graph = WeightedGraph::empty(n);
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        if graph.edge_count() == m {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::EdgeCountMismatch {
                    expected: m,
                    found: m + 1,
                },
            });
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v, w] = fields[..] else {
            return Err(malformed(line, "edge line must be `u v w`"));
        };
        let u: usize = u
            .parse()
            .map_err(|_| malformed(line, format!("bad vertex `{u}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| malformed(line, format!("bad vertex `{v}`")))?;
        let weight =
            rational::parse(w).ok_or_else(|| malformed(line, format!("bad weight `{w}`")))?;
        graph.push_edge(u, v, weight).map_err(|e| ParseError {
            line,
            kind: e.into(),
        })?;
    }
    if graph.edge_count() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: graph.edge_count(),
            },
        });
    }
    graph.finish().map_err(|e| ParseError {
        line: header_line,
        kind: e.into(),
    })
}
