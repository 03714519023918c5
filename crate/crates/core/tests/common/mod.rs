//! Shared test fixtures and the distance-based census oracle.
#![allow(dead_code)] // each test binary uses its own subset

use census_core::{
    gen_barabasi_albert, gen_erdos_renyi, gen_random_tree, gen_stochastic_block,
    gen_watts_strogatz, Graph, SeededRng,
};

/// Hand-built 7-node graph: node 6 is a 5-neighbor hub, node 3 sits one hop
/// behind node 0. Sources 0, 2, 5, 6 have eccentricity 2; sources 1, 3, 4
/// have eccentricity 3.
pub fn hub_spur_graph() -> Graph {
    Graph::from_edges(
        7,
        &[(0, 6), (1, 6), (2, 6), (4, 6), (5, 6), (0, 3), (0, 2), (0, 5)],
    )
    .unwrap()
}

/// Deterministic battery of 50 generator graphs covering every model.
pub fn generator_battery() -> Vec<Graph> {
    let mut graphs = Vec::with_capacity(50);
    for seed in 0..10 {
        graphs.push(gen_erdos_renyi(40 + seed as usize * 7, 0.12, seed).unwrap());
    }
    for seed in 0..10 {
        graphs.push(gen_watts_strogatz(60, 6, 0.02 * seed as f64, seed).unwrap());
    }
    for seed in 0..10 {
        graphs.push(gen_barabasi_albert(50 + seed as usize * 5, 3, seed).unwrap());
    }
    for seed in 0..10 {
        graphs.push(gen_stochastic_block(&[12, 18, 20], 0.7, 0.05, seed).unwrap());
    }
    for seed in 0..10 {
        graphs.push(gen_random_tree(30 + seed as usize * 6, seed));
    }
    graphs
}

/// Uniform random permutation of `0..n` drawn from the pinned stream.
pub fn random_permutation(n: usize, rng: &mut SeededRng) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Random small graph with node count in 2..=max_n.
pub fn random_graph(max_n: usize, rng: &mut SeededRng) -> Graph {
    let n = 2 + rng.next_below(max_n as u64 - 1) as usize;
    let p = 0.15 + 0.7 * rng.next_f64();
    gen_erdos_renyi(n, p, rng.next_u64()).unwrap()
}

/// Census vectors derived purely from per-source BFS distances — an
/// independent route to the same three censuses:
///
/// * node value at hop h = nodes at distance h;
/// * edge value at hop h = edges whose nearer endpoint is at distance h-1;
/// * stub value at hop h = stubs (u, v) with d(u) = h-1 and d(v) >= d(u).
#[allow(clippy::type_complexity)]
pub fn census_by_distances(g: &Graph) -> (Vec<Vec<u32>>, Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut node_vectors = Vec::new();
    let mut edge_vectors = Vec::new();
    let mut stub_vectors = Vec::new();
    for source in g.nodes() {
        let dist = g.bfs_distances(source);
        let ecc = dist.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut node_values = vec![0u32; ecc + 1];
        let mut edge_values = vec![0u32; ecc + 1];
        let mut stub_values = vec![0u32; ecc + 1];
        for d in dist.iter().flatten() {
            if *d > 0 {
                node_values[*d as usize - 1] += 1;
            }
        }
        for (u, v) in g.edges() {
            if let (Some(du), Some(dv)) = (dist[u as usize], dist[v as usize]) {
                edge_values[du.min(dv) as usize] += 1;
                if du <= dv {
                    stub_values[du as usize] += 1;
                }
                if dv <= du {
                    stub_values[dv as usize] += 1;
                }
            }
        }
        node_vectors.push(node_values);
        edge_vectors.push(edge_values);
        stub_vectors.push(stub_values);
    }
    (node_vectors, edge_vectors, stub_vectors)
}
