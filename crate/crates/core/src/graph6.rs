//! Graph6 codec.
//!
//! Graph6 packs an undirected simple graph into printable ASCII: a header
//! byte `n + 63` for `n <= 62`, followed by the upper triangle of the
//! adjacency matrix in column-major order — bits (0,1), (0,2), (1,2),
//! (0,3), ... — packed big-endian into 6-bit groups, each group stored as
//! `value + 63`. Trailing pad bits are zero.

use crate::graph::{Graph, Node};

/// Largest node count representable with the single-byte header.
pub const MAX_GRAPH6_NODES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("header declares {declared} nodes; only n <= {MAX_GRAPH6_NODES} is supported")]
    UnsupportedOrder { declared: usize },
    #[error("bit section truncated: expected {expected} bytes after the header, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at offset {offset}: expected {expected} bytes after the header")]
    TrailingData { offset: usize, expected: usize },
    #[error("graph of {node_count} nodes exceeds the graph6 header range (n <= {MAX_GRAPH6_NODES})")]
    TooManyNodes { node_count: usize },
}

fn bit_section_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a single graph6 line.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte {
            offset: 0,
            byte: header,
        });
    }
    if header == 126 {
        // Extended multi-byte headers encode n > 62; out of supported range.
        return Err(Graph6Error::UnsupportedOrder { declared: 63 });
    }
    let n = (header - 63) as usize;
    let expected = bit_section_len(n);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: 1 + expected,
            expected,
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = body[bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    offset: 1 + bit_index / 6,
                    byte,
                });
            }
            let group = byte - 63;
            if group & (1 << (5 - bit_index % 6)) != 0 {
                edges.push((u as Node, v as Node));
            }
            bit_index += 1;
            if bit_index >= n * (n - 1) / 2 {
                break 'outer;
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("graph6 bits describe a simple graph"))
}

/// Encodes a graph as a minimal-form graph6 line.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.node_count();
    if n > MAX_GRAPH6_NODES {
        return Err(Graph6Error::TooManyNodes { node_count: n });
    }
    let mut out = Vec::with_capacity(1 + bit_section_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u as Node, v as Node) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
