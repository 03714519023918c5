//! Random and deterministic graph constructors.
//!
//! All randomized generators draw from [`SeededRng`], a pinned ChaCha8
//! stream with crate-local sampling, so a given (seed, parameters) pair
//! produces a bit-identical graph on every platform and build.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Node};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(String),
    #[error("ring degree k={k} must be even and smaller than n={n}")]
    InvalidRingDegree { k: usize, n: usize },
    #[error("attachment count m={m} must satisfy 1 <= m < n={n}")]
    InvalidAttachment { m: usize, n: usize },
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::InvalidProbability(format!("{p}")))
    }
}

/// Deterministic pseudorandom stream: ChaCha8 keyed by a 64-bit seed.
///
/// Uniform sampling is implemented here rather than borrowed from a helper
/// crate, so the exact draw sequence is part of this crate's contract.
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in [0, 1), with 53 mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [0, bound) by rejection, unbiased for any bound > 0.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }
}

/// Every unordered pair connected independently with probability `p`.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    check_probability(p)?;
    let mut rng = SeededRng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_f64() < p {
                edges.push((u as Node, v as Node));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generated pairs are valid"))
}

/// Ring lattice of `n` nodes each joined to its `k` nearest neighbors, then
/// every lattice edge rewired with probability `p`. Edges are visited in
/// (node, offset) order and the far endpoint is replaced, so the edge count
/// is always exactly `n * k / 2`.
pub fn gen_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if k % 2 != 0 || k >= n {
        return Err(GeneratorError::InvalidRingDegree { k, n });
    }
    check_probability(p)?;
    let mut rng = SeededRng::new(seed);
    let mut edges: Vec<(Node, Node)> = Vec::with_capacity(n * k / 2);
    let mut present = std::collections::HashSet::with_capacity(n * k / 2);
    let mut degree = vec![0usize; n];
    let key = |a: Node, b: Node| (a.min(b), a.max(b));
    for u in 0..n {
        for offset in 1..=k / 2 {
            let v = ((u + offset) % n) as Node;
            let u = u as Node;
            edges.push((u, v));
            present.insert(key(u, v));
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
    }
    for slot in 0..edges.len() {
        if rng.next_f64() >= p {
            continue;
        }
        let (u, v) = edges[slot];
        if degree[u as usize] == n - 1 {
            continue; // no non-duplicate target exists
        }
        let w = loop {
            let w = rng.next_below(n as u64) as Node;
            if w != u && !present.contains(&key(u, w)) {
                break w;
            }
        };
        present.remove(&key(u, v));
        present.insert(key(u, w));
        degree[v as usize] -= 1;
        degree[w as usize] += 1;
        edges[slot] = (u, w);
    }
    Ok(Graph::from_edges(n, &edges).expect("rewired pairs are valid"))
}

/// Preferential attachment: a star of `m + 1` nodes, then each new node
/// attaches `m` edges to distinct existing nodes sampled from a
/// degree-proportional urn with duplicate targets rejected.
pub fn gen_barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if m < 1 || m >= n {
        return Err(GeneratorError::InvalidAttachment { m, n });
    }
    let mut rng = SeededRng::new(seed);
    let mut edges: Vec<(Node, Node)> = Vec::with_capacity(m + (n - m - 1) * m);
    let mut urn: Vec<Node> = Vec::with_capacity(2 * (m + (n - m - 1) * m));
    for leaf in 1..=m as Node {
        edges.push((0, leaf));
        urn.push(0);
        urn.push(leaf);
    }
    let mut chosen = std::collections::HashSet::with_capacity(m * 2);
    for t in (m + 1)..n {
        chosen.clear();
        let mut targets = Vec::with_capacity(m);
        while targets.len() < m {
            let candidate = urn[rng.next_below(urn.len() as u64) as usize];
            if chosen.insert(candidate) {
                targets.push(candidate);
            }
        }
        for target in targets {
            edges.push((t as Node, target));
            urn.push(target);
            urn.push(t as Node);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("attachment pairs are valid"))
}

/// Planted-partition graph: intra-block pairs connected with `p_in`,
/// inter-block pairs with `p_out`.
pub fn gen_stochastic_block(
    sizes: &[usize],
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    check_probability(p_in)?;
    check_probability(p_out)?;
    let n: usize = sizes.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (b, &size) in sizes.iter().enumerate() {
        block.extend(std::iter::repeat(b).take(size));
    }
    let mut rng = SeededRng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let p = if block[u] == block[v] { p_in } else { p_out };
            if rng.next_f64() < p {
                edges.push((u as Node, v as Node));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generated pairs are valid"))
}

/// Uniform random labeled tree on `n` nodes via a random Pruefer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).unwrap();
    }
    let mut rng = SeededRng::new(seed);
    let sequence: Vec<Node> = (0..n - 2)
        .map(|_| rng.next_below(n as u64) as Node)
        .collect();
    let mut degree = vec![1u32; n];
    for &v in &sequence {
        degree[v as usize] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<Node>> = (0..n as Node)
        .filter(|&v| degree[v as usize] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &sequence {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("tree decode always has a leaf");
        edges.push((leaf, v));
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("pruefer decode yields a tree")
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u as Node, v as Node));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) as Node, v as Node)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 nodes");
    let mut edges: Vec<_> = (1..n).map(|v| ((v - 1) as Node, v as Node)).collect();
    edges.push((0, (n - 1) as Node));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v as Node)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// Generalized Petersen graph GP(n, k): an outer n-cycle, an inner n-node
/// star polygon with step `k`, and spokes between them.
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    assert!(n >= 3 && k >= 1 && k < n);
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        let outer = i as Node;
        let inner = (n + i) as Node;
        edges.push((outer, ((i + 1) % n) as Node));
        edges.push((outer, inner));
        edges.push((inner, (n + (i + k) % n) as Node));
    }
    Graph::from_edges(2 * n, &edges).unwrap()
}

/// The dodecahedral graph: 20 nodes, 30 edges, GP(10, 2).
pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2)
}

/// The Desargues graph: 20 nodes, 30 edges, GP(10, 3).
pub fn desargues() -> Graph {
    generalized_petersen(10, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erdos_renyi_extremes() {
        let empty = gen_erdos_renyi(10, 0.0, 1).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = gen_erdos_renyi(10, 1.0, 1).unwrap();
        assert_eq!(full.edge_count(), 45);
    }

    #[test]
    fn erdos_renyi_is_seed_deterministic() {
        let a = gen_erdos_renyi(40, 0.3, 9).unwrap();
        let b = gen_erdos_renyi(40, 0.3, 9).unwrap();
        let c = gen_erdos_renyi(40, 0.3, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn watts_strogatz_edge_count_is_exact() {
        for p in [0.0, 0.09, 1.0] {
            let g = gen_watts_strogatz(40, 6, p, 3).unwrap();
            assert_eq!(g.edge_count(), 40 * 6 / 2, "p={p}");
            g.validate().unwrap();
        }
    }

    #[test]
    fn watts_strogatz_lattice_at_zero_rewiring() {
        let g = gen_watts_strogatz(12, 4, 0.0, 0).unwrap();
        for u in g.nodes() {
            assert_eq!(g.degree(u), 4);
        }
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(0, 11) && g.has_edge(0, 10));
    }

    #[test]
    fn watts_strogatz_rejects_bad_k() {
        assert!(gen_watts_strogatz(10, 3, 0.1, 0).is_err());
        assert!(gen_watts_strogatz(10, 10, 0.1, 0).is_err());
    }

    #[test]
    fn barabasi_albert_edge_count_identity() {
        let g = gen_barabasi_albert(50, 3, 5).unwrap();
        assert_eq!(g.edge_count(), 3 + (50 - 3 - 1) * 3);
        let star = gen_barabasi_albert(5, 4, 5).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);
        let tree = gen_barabasi_albert(30, 1, 5).unwrap();
        assert_eq!(tree.edge_count(), 29);
        assert!(tree.is_connected());
    }

    #[test]
    fn stochastic_block_extremes() {
        let empty = gen_stochastic_block(&[5, 5], 0.0, 0.0, 2).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let one_block = gen_stochastic_block(&[6], 1.0, 0.0, 2).unwrap();
        assert_eq!(one_block.edge_count(), 15);
    }

    #[test]
    fn random_tree_is_a_tree() {
        for seed in 0..5 {
            let g = gen_random_tree(30, seed);
            assert_eq!(g.edge_count(), 29);
            assert!(g.is_connected());
        }
        assert_eq!(gen_random_tree(1, 0).node_count(), 1);
        assert_eq!(gen_random_tree(2, 0).edge_count(), 1);
    }

    #[test]
    fn petersen_family_fixtures() {
        for g in [dodecahedron(), desargues()] {
            assert_eq!(g.node_count(), 20);
            assert_eq!(g.edge_count(), 30);
            for u in g.nodes() {
                assert_eq!(g.degree(u), 3);
            }
            assert!(g.is_connected());
            g.validate().unwrap();
        }
    }
}
