//! Text formats: edge lists, graph6, and rotation-system files.
//!
//! All parsers are pure functions from text to validated structures; file
//! IO stays in the CLI crate.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, RotationError, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Problem tied to a specific input line (1-based).
    Line {
        line: usize,
        message: String,
    },
    /// Vertex labels are not exactly 0..n−1.
    NonContiguousLabels {
        missing: u32,
    },
    Empty,
    Graph(GraphError),
    Rotation(RotationError),
    Graph6(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Line { line, message } => write!(f, "line {line}: {message}"),
            ParseError::NonContiguousLabels { missing } => {
                write!(
                    f,
                    "vertex labels are not 0..n-1: label {missing} is missing"
                )
            }
            ParseError::Empty => write!(f, "empty input"),
            ParseError::Graph(e) => write!(f, "{e}"),
            ParseError::Rotation(e) => write!(f, "{e}"),
            ParseError::Graph6(msg) => write!(f, "graph6: {msg}"),
        }
    }
}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        ParseError::Graph(e)
    }
}

impl From<RotationError> for ParseError {
    fn from(e: RotationError) -> Self {
        ParseError::Rotation(e)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parse a "u v" edge list. `#` starts a comment line, blank lines are
/// ignored. Vertex labels must be exactly the integers 0..n−1.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for (line, l) in content_lines(text) {
        let mut it = l.split_whitespace();
        let parse_field = |tok: Option<&str>| -> Result<u32, ParseError> {
            tok.and_then(|t| t.parse::<u32>().ok())
                .ok_or(ParseError::Line {
                    line,
                    message: String::from("expected two vertex labels \"u v\""),
                })
        };
        let u = parse_field(it.next())?;
        let v = parse_field(it.next())?;
        if it.next().is_some() {
            return Err(ParseError::Line {
                line,
                message: String::from("trailing tokens after \"u v\""),
            });
        }
        if u == v {
            return Err(ParseError::Line {
                line,
                message: String::from("loop edge"),
            });
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if pairs.iter().any(|&(a, b)| (a, b) == key) {
            return Err(ParseError::Line {
                line,
                message: String::from("duplicate edge"),
            });
        }
        pairs.push(key);
    }
    if pairs.is_empty() {
        return Err(ParseError::Empty);
    }
    let max = pairs.iter().map(|&(_, v)| v).max().unwrap();
    let mut present = vec![false; max as usize + 1];
    for &(u, v) in &pairs {
        present[u as usize] = true;
        present[v as usize] = true;
    }
    if let Some(missing) = present.iter().position(|&p| !p) {
        return Err(ParseError::NonContiguousLabels {
            missing: missing as u32,
        });
    }
    Ok(Graph::new(max as usize + 1, &pairs)?)
}

/// Parse a single graph in graph6 format (optionally prefixed by the
/// standard ">>graph6<<" header).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or(ParseError::Empty)?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Graph6(alloc::format!(
                "byte {b} outside the printable range 63..=126"
            )));
        }
    }
    let (n, rest) = decode_graph6_order(bytes)?;
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() != expected {
        return Err(ParseError::Graph6(alloc::format!(
            "expected {expected} data bytes for n={n}, got {}",
            rest.len()
        )));
    }
    let mut pairs = Vec::new();
    let mut k = 0usize;
    // upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n {
        for u in 0..v {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((u as u32, v as u32));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &pairs)?)
}

fn decode_graph6_order(bytes: &[u8]) -> Result<(usize, &[u8]), ParseError> {
    let val = |b: u8| (b - 63) as usize;
    match bytes {
        [126, 126, a, b, c, d, e, f, rest @ ..] => {
            let n = ((((((val(*a) << 6 | val(*b)) << 6 | val(*c)) << 6) | val(*d)) << 6 | val(*e))
                << 6)
                | val(*f);
            Ok((n, rest))
        }
        [126, a, b, c, rest @ ..] => Ok(((val(*a) << 12) | (val(*b) << 6) | val(*c), rest)),
        [126, ..] => Err(ParseError::Graph6(String::from("truncated order field"))),
        [b, rest @ ..] => Ok((val(*b), rest)),
        [] => Err(ParseError::Empty),
    }
}

/// Parse a rotation-system file: one line per vertex, "v: e1 e2 e3 ..."
/// listing incident edge ids in cyclic order.
pub fn parse_rotation(text: &str, g: &Graph) -> Result<RotationSystem, ParseError> {
    let n = g.vertex_count();
    let mut orders: Vec<Option<Vec<u32>>> = vec![None; n];
    for (line, l) in content_lines(text) {
        let (head, tail) = l.split_once(':').ok_or(ParseError::Line {
            line,
            message: String::from("expected \"v: e1 e2 ...\""),
        })?;
        let v: usize = head.trim().parse().map_err(|_| ParseError::Line {
            line,
            message: String::from("bad vertex label"),
        })?;
        if v >= n {
            return Err(ParseError::Line {
                line,
                message: alloc::format!("vertex {v} out of range for n={n}"),
            });
        }
        if orders[v].is_some() {
            return Err(ParseError::Line {
                line,
                message: alloc::format!("vertex {v} listed twice"),
            });
        }
        let ids = tail
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<u32>, _>>()
            .map_err(|_| ParseError::Line {
                line,
                message: String::from("bad edge id"),
            })?;
        orders[v] = Some(ids);
    }
    if orders.iter().any(Option::is_none) {
        return Err(ParseError::Rotation(RotationError::WrongVertexCount {
            got: orders.iter().filter(|o| o.is_some()).count(),
            expected: n,
        }));
    }
    let orders: Vec<Vec<u32>> = orders.into_iter().map(Option::unwrap).collect();
    Ok(RotationSystem::new(g, orders)?)
}
