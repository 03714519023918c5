//! Plain-text edgelist codec: one `u v` pair per line.
//!
//! Readers accept `#` comments, blank lines, reversed pairs, and duplicates.
//! Writers emit `u v` with `u < v` in ascending order and no comments, so
//! output is deterministic for a given graph.

use crate::graph::{Graph, Node};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgelistError {
    #[error("line {line}: expected two integers, found {found:?}")]
    TokenCount { line: usize, found: usize },
    #[error("line {line}: {token:?} is not a node index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: self-loop {node} {node} is not allowed")]
    SelfLoop { line: usize, node: Node },
}

/// Parses edgelist text. The graph gets `max index + 1` nodes, or
/// `node_count_hint` when that is larger.
pub fn parse_edgelist(text: &str, node_count_hint: Option<usize>) -> Result<Graph, EdgelistError> {
    let mut edges = Vec::new();
    let mut max_node: Option<Node> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(EdgelistError::TokenCount {
                line,
                found: tokens.len(),
            });
        }
        let mut pair = [0 as Node; 2];
        for (slot, token) in pair.iter_mut().zip(&tokens) {
            *slot = token.parse().map_err(|_| EdgelistError::BadToken {
                line,
                token: token.to_string(),
            })?;
        }
        let [u, v] = pair;
        if u == v {
            return Err(EdgelistError::SelfLoop { line, node: u });
        }
        max_node = Some(max_node.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let node_count = match (max_node, node_count_hint) {
        (Some(m), hint) => hint.unwrap_or(0).max(m as usize + 1),
        (None, hint) => hint.unwrap_or(0),
    };
    Ok(Graph::from_edges(node_count, &edges).expect("edgelist bounds already checked"))
}

/// Serializes a graph as sorted `u v` lines, one edge per line.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
