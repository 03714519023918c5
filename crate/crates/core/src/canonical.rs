//! Brute-force canonical labeling for small graphs.
//!
//! The canonical form of a graph is the lexicographically minimal
//! upper-triangle adjacency bitstring over all node permutations, with bits
//! ordered column-major: (0,1), (0,2), (1,2), (0,3), ... — the same bit
//! order graph6 uses. Two graphs are isomorphic exactly when their canonical
//! forms are equal.
//!
//! The search assigns canonical positions one node at a time. Placing
//! position `k` fixes the `k` bits of column `k`, so the code grows by a
//! contiguous chunk per level and a running prefix comparison against the
//! best complete code prunes entire branches. The factorial worst case
//! remains, which is why the node count is capped.

use crate::graph::{Graph, Node};
use crate::key::CanonicalKey;

/// Default node-count cap for the factorial-time search.
pub const DEFAULT_CANONICAL_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph of {node_count} nodes exceeds the canonical-labeling limit of {limit}")]
pub struct CanonicalLimitError {
    pub node_count: usize,
    pub limit: usize,
}

/// Adjacency as one bitmask per node; supports the n <= 10 search.
fn neighbor_masks(g: &Graph) -> Vec<u16> {
    g.nodes()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(0u16, |mask, &v| mask | (1 << v))
        })
        .collect()
}

struct Search<'a> {
    masks: &'a [u16],
    n: usize,
    total_bits: u32,
    /// Original node placed at each canonical position.
    placed: Vec<u8>,
    used: u16,
    best: u64,
}

impl Search<'_> {
    fn run(&mut self) {
        self.descend(0, 0, 0);
    }

    /// Extends the partial assignment at `level` with prefix `prefix`
    /// covering `bits` bits.
    fn descend(&mut self, level: usize, prefix: u64, bits: u32) {
        if level == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        // Candidate chunks: adjacency of the candidate against the placed
        // prefix, ordered ascending so small codes are reached first.
        let mut chunks: Vec<(u64, u8)> = Vec::with_capacity(self.n - level);
        for v in 0..self.n as u8 {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let mask = self.masks[v as usize];
            let mut chunk = 0u64;
            for (i, &p) in self.placed[..level].iter().enumerate() {
                chunk |= (((mask >> p) & 1) as u64) << (level - 1 - i);
            }
            chunks.push((chunk, v));
        }
        chunks.sort_unstable();
        let new_bits = bits + level as u32;
        for (chunk, v) in chunks {
            let new_prefix = (prefix << level) | chunk;
            // The best code restricted to this many bits bounds the branch.
            if new_prefix > self.best >> (self.total_bits - new_bits) {
                break; // chunks ascend, so later candidates prune too
            }
            self.placed[level] = v;
            self.used |= 1 << v;
            self.descend(level + 1, new_prefix, new_bits);
            self.used &= !(1 << v);
        }
    }
}

/// Minimal code for adjacency given as per-node bitmasks; `masks.len() <= 10`.
pub(crate) fn canonical_code_masks(masks: &[u16]) -> u64 {
    let n = masks.len();
    if n < 2 {
        return 0;
    }
    let mut search = Search {
        masks,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        placed: vec![0; n],
        used: 0,
        best: u64::MAX >> (64 - n * (n - 1) / 2),
    };
    search.run();
    search.best
}

/// Per-node bitmask adjacency of the graph encoded by `code`.
pub(crate) fn masks_from_code(n: usize, code: u64) -> [u16; 10] {
    debug_assert!(n <= DEFAULT_CANONICAL_LIMIT);
    let total_bits = n * (n - 1) / 2;
    let mut masks = [0u16; 10];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code & (1 << (total_bits - 1 - bit)) != 0 {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    masks
}

/// Minimal upper-triangle code over all permutations, for `n <= 10`.
pub fn canonical_code(g: &Graph, limit: usize) -> Result<u64, CanonicalLimitError> {
    let n = g.node_count();
    if n > limit || n > DEFAULT_CANONICAL_LIMIT {
        return Err(CanonicalLimitError {
            node_count: n,
            limit: limit.min(DEFAULT_CANONICAL_LIMIT),
        });
    }
    Ok(canonical_code_masks(&neighbor_masks(g)))
}

/// Canonical key: node count plus the minimal code, so keys from different
/// orders never compare equal.
pub fn canonical_label(g: &Graph) -> Result<CanonicalKey, CanonicalLimitError> {
    canonical_label_with_limit(g, DEFAULT_CANONICAL_LIMIT)
}

pub fn canonical_label_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<CanonicalKey, CanonicalLimitError> {
    let code = canonical_code(g, limit)?;
    let mut bytes = Vec::with_capacity(9);
    bytes.push(g.node_count() as u8);
    bytes.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalKey::new(bytes))
}

/// Rebuilds the graph whose upper-triangle bits equal `code`; the inverse of
/// [`canonical_code`] for canonical representatives.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total_bits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code & (1 << (total_bits - 1 - bit)) != 0 {
                edges.push((u as Node, v as Node));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("code bits describe a simple graph")
}
