//! Text formats: graph6 and the plain edge-list format.
//!
//! Edge lists come in two shapes. The general one is `n: i j, i j, ...`
//! (`n:` alone for an edgeless graph). The compact pair form `01 02 13 ...`
//! writes every edge as two decimal digits; the order is the largest index
//! plus one, so it only describes graphs without trailing isolated vertices
//! on at most ten vertices. Files mix both forms freely with graph6 lines;
//! blank lines and `#` comments are skipped.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {0:#04x}")]
    BadByte(u8),
    #[error("graph6 order {0} exceeds the maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parse failure tied to its 1-based line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct LineError {
    pub line: usize,
    #[source]
    pub source: FormatError,
}

/// Encodes `g` in graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes a graph6 string. An optional `>>graph6<<` prefix is accepted.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.strip_prefix(">>graph6<<").unwrap_or(text).as_bytes();
    let (&head, body) = bytes.split_first().ok_or(FormatError::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(FormatError::BadByte(head));
    }
    if head == 126 {
        // Extended header: only used for n >= 63.
        return Err(FormatError::TooLarge(63));
    }
    let n = (head - 63) as usize;
    if n > MAX_ORDER {
        return Err(FormatError::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Length { expected, found: body.len() });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::BadByte(byte));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(FormatError::BadByte(last));
        }
        let pad = expected * 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Formats `g` as `n: i j, i j, ...`.
pub fn to_edge_line(g: &Graph) -> String {
    let mut out = format!("{}:", g.order());
    for (k, (u, v)) in g.edges().into_iter().enumerate() {
        let sep = if k == 0 { " " } else { ", " };
        let _ = write!(out, "{sep}{u} {v}");
    }
    out
}

/// Parses either edge-list shape.
pub fn from_edge_line(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim();
    if let Some((head, rest)) = line.split_once(':') {
        let n: usize =
            head.trim().parse().map_err(|_| FormatError::EdgeList(format!("bad order {:?}", head.trim())))?;
        let mut edges = Vec::new();
        for item in rest.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let mut it = item.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(FormatError::EdgeList(format!("bad edge {item:?}")));
            };
            let parse = |s: &str| s.parse::<usize>().map_err(|_| FormatError::EdgeList(format!("bad vertex {s:?}")));
            edges.push((parse(a)?, parse(b)?));
        }
        if rest.trim().is_empty() && n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n).into());
        }
        return Ok(Graph::from_edge_list(n, &edges)?);
    }
    let cleaned: String =
        line.chars().map(|c| if matches!(c, '{' | '}' | ',' | '$' | '\\') { ' ' } else { c }).collect();
    let mut edges = Vec::new();
    for tok in cleaned.split_whitespace() {
        let d: Vec<u32> = tok.chars().filter_map(|c| c.to_digit(10)).collect();
        if d.len() != 2 || tok.len() != 2 {
            return Err(FormatError::EdgeList(format!("bad pair {tok:?}")));
        }
        edges.push((d[0] as usize, d[1] as usize));
    }
    if edges.is_empty() {
        return Err(FormatError::EdgeList("no edges in pair form".into()));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) + 1;
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Parses one non-comment line in any supported format.
pub fn parse_graph_line(line: &str) -> Result<Graph, FormatError> {
    let t = line.trim();
    match t.as_bytes().first() {
        Some(b) if b.is_ascii_digit() || *b == b'{' || *b == b'$' => from_edge_line(t),
        _ => from_graph6(t),
    }
}

/// Parses a whole file, returning `(line number, graph)` pairs.
pub fn parse_graphs(text: &str) -> Result<Vec<(usize, Graph)>, LineError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let g = parse_graph_line(t).map_err(|source| LineError { line: i + 1, source })?;
        out.push((i + 1, g));
    }
    Ok(out)
}
