//! Hop × degree frequency matrices aggregated from census vectors, plus an
//! independently coded shell-counting construction used as an integrity
//! oracle against the census path.

use serde::Serialize;

use crate::census::CensusInstance;
use crate::graph::Graph;
use crate::key::CanonicalKey;

/// Frequency matrix: rows are hops 1..=H (H = longest vector length), and
/// columns are degree values 0..=max observed. After padding every vector
/// with trailing zeros to length H, each row sums to the node count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BMatrix {
    hops: usize,
    degrees: usize,
    cells: Vec<u64>,
}

impl BMatrix {
    fn zeroed(hops: usize, degrees: usize) -> Self {
        BMatrix {
            hops,
            degrees,
            cells: vec![0; hops * degrees],
        }
    }

    /// Number of hop rows, H.
    pub fn hop_count(&self) -> usize {
        self.hops
    }

    /// Number of degree columns (max observed degree + 1).
    pub fn degree_count(&self) -> usize {
        self.degrees
    }

    /// Frequency at 1-based `hop` and degree value `degree`.
    pub fn get(&self, hop: usize, degree: usize) -> u64 {
        assert!((1..=self.hops).contains(&hop), "hop {hop} out of range");
        assert!(degree < self.degrees, "degree {degree} out of range");
        self.cells[(hop - 1) * self.degrees + degree]
    }

    fn bump(&mut self, hop: usize, degree: usize) {
        self.cells[(hop - 1) * self.degrees + degree] += 1;
    }

    pub fn row(&self, hop: usize) -> &[u64] {
        &self.cells[(hop - 1) * self.degrees..hop * self.degrees]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (1..=self.hops).map(|h| self.row(h).iter().sum()).collect()
    }
}

/// Builds the BMatrix of a census instance by padding every vector with
/// trailing zeros to the longest length and counting, per hop, how many
/// vectors hold each degree value.
pub fn aggregate(ci: &CensusInstance, node_count: usize) -> BMatrix {
    assert_eq!(
        ci.vectors.len(),
        node_count,
        "census instance does not cover every node"
    );
    let hops = ci.max_len();
    let degrees = ci.max_value() as usize + 1;
    if hops == 0 {
        return BMatrix::zeroed(0, 0);
    }
    let mut matrix = BMatrix::zeroed(hops, degrees);
    for vector in &ci.vectors {
        for hop in 1..=hops {
            let value = vector.values.get(hop - 1).copied().unwrap_or(0);
            matrix.bump(hop, value as usize);
        }
    }
    matrix
}

/// The original construction: per source, count nodes per shortest-path
/// shell and aggregate the shell-size distributions directly.
///
/// This deliberately avoids the census engine — it leans only on plain BFS
/// distances — so it can certify `aggregate(census_node)` from an
/// independent code path.
pub fn bfs_bmatrix(g: &Graph) -> BMatrix {
    let n = g.node_count();
    if n == 0 {
        return BMatrix::zeroed(0, 0);
    }
    let mut shell_counts: Vec<Vec<u32>> = Vec::with_capacity(n);
    for source in g.nodes() {
        let dist = g.bfs_distances(source);
        let ecc = dist.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut shells = vec![0u32; ecc + 1];
        for d in dist.iter().flatten() {
            if *d > 0 {
                shells[*d as usize - 1] += 1;
            }
        }
        // The terminal entry stays zero: the hop after the last shell.
        shell_counts.push(shells);
    }
    let hops = shell_counts.iter().map(Vec::len).max().unwrap_or(0);
    let degrees = shell_counts
        .iter()
        .flat_map(|s| s.iter().copied())
        .max()
        .unwrap_or(0) as usize
        + 1;
    let mut matrix = BMatrix::zeroed(hops, degrees);
    for shells in &shell_counts {
        for hop in 1..=hops {
            let value = shells.get(hop - 1).copied().unwrap_or(0);
            matrix.bump(hop, value as usize);
        }
    }
    matrix
}

/// Serializes as a `H W` header line followed by H rows of W space-separated
/// counts.
pub fn serialize_bmatrix(b: &BMatrix) -> String {
    let mut out = format!("{} {}", b.hops, b.degrees);
    for hop in 1..=b.hops {
        out.push('\n');
        let row = b
            .row(hop)
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&row);
    }
    out
}

/// Key equality is matrix equality: dimensions are embedded in the bytes.
pub fn canonical_bmatrix(b: &BMatrix) -> CanonicalKey {
    CanonicalKey::new(serialize_bmatrix(b).into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::bfs_census;
    use crate::generators::{complete_graph, desargues, dodecahedron, path_graph};

    #[test]
    fn triangle_aggregation() {
        let ct = bfs_census(&complete_graph(3));
        let b = aggregate(&ct.node_census, 3);
        assert_eq!(b.hop_count(), 2);
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(2, 0), 3);
        assert_eq!(b.row_sums(), vec![3, 3]);
    }

    #[test]
    fn single_node_aggregation() {
        let ct = bfs_census(&Graph::empty(1));
        let b = aggregate(&ct.node_census, 1);
        assert_eq!(b.hop_count(), 1);
        assert_eq!(b.degree_count(), 1);
        assert_eq!(b.get(1, 0), 1);
    }

    #[test]
    fn hub_and_spur_terminal_cell() {
        let g = Graph::from_edges(
            7,
            &[(0, 6), (1, 6), (2, 6), (4, 6), (5, 6), (0, 3), (0, 2), (0, 5)],
        )
        .unwrap();
        let ct = bfs_census(&g);
        let b = aggregate(&ct.node_census, 7);
        assert_eq!(b.get(3, 0), 4);
        assert!(b.row_sums().iter().all(|&s| s == 7));
    }

    #[test]
    fn shell_matrix_matches_path_counts() {
        let b = bfs_bmatrix(&path_graph(3));
        assert_eq!(b.get(1, 1), 2);
        assert_eq!(b.get(1, 2), 1);
        assert_eq!(b.get(2, 1), 2);
        assert_eq!(b.get(2, 0), 1);
        assert_eq!(b.get(3, 0), 3);
    }

    #[test]
    fn oracle_agrees_with_aggregation() {
        let graphs = [
            path_graph(6),
            complete_graph(5),
            crate::generators::gen_erdos_renyi(20, 0.25, 3).unwrap(),
            Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            let ct = bfs_census(g);
            assert_eq!(bfs_bmatrix(g), aggregate(&ct.node_census, g.node_count()));
        }
    }

    #[test]
    fn serialization_embeds_dimensions() {
        let b = bfs_bmatrix(&path_graph(3));
        assert_eq!(serialize_bmatrix(&b), "3 3\n0 2 1\n1 2 0\n3 0 0");
    }

    #[test]
    fn portrait_collision_pair() {
        let (dode, desa) = (dodecahedron(), desargues());
        let (ct_a, ct_b) = (bfs_census(&dode), bfs_census(&desa));
        let portrait_a = canonical_bmatrix(&aggregate(&ct_a.node_census, 20));
        let portrait_b = canonical_bmatrix(&aggregate(&ct_b.node_census, 20));
        assert_eq!(portrait_a, portrait_b);
        let stub_a = crate::census::canonical_census(&ct_a.stub_census);
        let stub_b = crate::census::canonical_census(&ct_b.stub_census);
        assert_ne!(stub_a, stub_b);
    }
}
