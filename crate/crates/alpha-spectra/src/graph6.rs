//! External graph formats: the graph6 line codec (n < 63) and a small
//! plain-text adjacency format for hand-authored fixtures.
//!
//! graph6 layout: one printable ASCII line per graph. The first byte is
//! `n + 63`; the upper-triangle adjacency bits follow in column-major order
//! ((0,1), (0,2), (1,2), (0,3), ...), packed six per byte, most significant
//! bit first, each byte offset by 63. Padding bits must be zero.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Graph6Error {
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    InvalidChar { byte: u8, pos: usize },
    #[error("payload truncated: expected {expected} bytes after the size byte, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing garbage after position {0} (extra bytes or nonzero padding)")]
    TrailingGarbage(usize),
    #[error("order {0} not supported (single-byte graph6 only, n < 63)")]
    TooLarge(usize),
    #[error("empty input")]
    Empty,
    #[error("invalid adjacency text: {0}")]
    BadAdjacencyText(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line (without the trailing newline).
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { byte: b, pos });
        }
    }
    if bytes[0] == 126 {
        // Multi-byte size prefix: out of scope by design.
        return Err(Graph6Error::TooLarge(63));
    }
    let n = (bytes[0] - 63) as usize;
    let expected = payload_len(n);
    let payload = &bytes[1..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, got: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingGarbage(1 + expected));
    }

    let mut adj = vec![false; n * n];
    let mut bit_index = 0usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    for (ci, &b) in payload.iter().enumerate() {
        let val = b - 63;
        for k in 0..6 {
            let bit = (val >> (5 - k)) & 1;
            if bit_index < total_bits {
                if bit == 1 {
                    let (u, v) = triangle_coords(bit_index);
                    adj[u * n + v] = true;
                    adj[v * n + u] = true;
                }
            } else if bit == 1 {
                // Nonzero padding is corruption, same as extra bytes.
                return Err(Graph6Error::TrailingGarbage(1 + ci));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_adj(n, adj))
}

/// Inverse of the bit layout: the `idx`-th upper-triangle bit is (u, v) with
/// v the column and u < v the row, columns visited in increasing order.
pub(crate) fn triangle_coords(idx: usize) -> (usize, usize) {
    let mut v = 1usize;
    let mut start = 0usize;
    while start + v <= idx {
        start += v;
        v += 1;
    }
    (idx - start, v)
}

/// Encodes a graph as a graph6 line (no trailing newline). Requires n < 63.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n >= 63 {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![(n as u8) + 63];
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut current = 0u8;
    let mut filled = 0u8;
    for idx in 0..total_bits {
        let (u, v) = triangle_coords(idx);
        current <<= 1;
        if g.has_edge(u, v) {
            current |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(current + 63);
            current = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        current <<= 6 - filled;
        out.push(current + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads a graph6 file: one graph per line, blank lines ignored, optional
/// `>>graph6<<` header tolerated.
pub fn decode_file(content: &str) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    for line in content.lines() {
        let line = line.trim_end_matches('\r');
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        graphs.push(decode(line)?);
    }
    Ok(graphs)
}

/// Parses the plain-text adjacency format: first non-comment line is the
/// vertex count, each later line one `u v` edge. `#` starts a comment.
pub fn parse_adjacency_text(content: &str) -> Result<Graph, Graph6Error> {
    let mut lines = content
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Graph6Error::BadAdjacencyText("missing vertex count".into()))?
        .parse()
        .map_err(|_| Graph6Error::BadAdjacencyText("vertex count is not an integer".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Graph6Error::BadAdjacencyText(format!(
                    "edge line must be exactly 'u v', got {line:?}"
                )))
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Graph6Error::BadAdjacencyText(format!("bad vertex index {s:?}")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Ok(Graph::from_edges(n, &edges)?)
}
