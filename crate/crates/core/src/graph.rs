//! Undirected simple graph stored as sorted adjacency lists.
//!
//! Node indices are dense and 0-based. Every constructor validates the
//! simple-graph invariants: symmetric adjacency, no self-loops, no duplicate
//! neighbors, strictly increasing neighbor lists, all indices in range.

use std::fmt;

/// Node index within a [`Graph`].
pub type Node = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("node index {node} out of range for graph of {node_count} nodes")]
    NodeOutOfRange { node: Node, node_count: usize },
    #[error("self-loop on node {0} is not allowed")]
    SelfLoop(Node),
    #[error("edge {{{0}, {1}}} does not exist")]
    MissingEdge(Node, Node),
    #[error("edge {{{0}, {1}}} already exists")]
    DuplicateEdge(Node, Node),
}

/// Undirected simple graph.
///
/// Immutable after construction; cheap to clone and safe to share across
/// threads. Neighbor lists are strictly increasing, so `neighbors(u)` can be
/// binary-searched and iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Node>>,
}

impl Graph {
    /// Graph with `node_count` nodes and no edges.
    pub fn empty(node_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); node_count],
        }
    }

    /// Builds a graph from an edge list. Reversed duplicates collapse into a
    /// single undirected edge; self-loops are rejected.
    pub fn from_edges(node_count: usize, edges: &[(Node, Node)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w as usize >= node_count {
                    return Err(GraphError::NodeOutOfRange {
                        node: w,
                        node_count,
                    });
                }
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of undirected edges, half the sum of adjacency lengths.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, u: Node) -> usize {
        self.adjacency[u as usize].len()
    }

    pub fn neighbors(&self, u: Node) -> &[Node] {
        &self.adjacency[u as usize]
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        u != v && self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Iterates edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as Node;
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> {
        0..self.adjacency.len() as Node
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// Relabels nodes: node `u` becomes `perm[u]`. `perm` must be a
    /// permutation of `0..node_count`.
    pub fn permute(&self, perm: &[Node]) -> Graph {
        assert_eq!(perm.len(), self.node_count());
        let mut adjacency = vec![Vec::new(); self.node_count()];
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            let pu = perm[u] as usize;
            adjacency[pu] = nbrs.iter().map(|&v| perm[v as usize]).collect();
            adjacency[pu].sort_unstable();
        }
        Graph { adjacency }
    }

    /// BFS distances from `source`; `None` for unreachable nodes.
    pub fn bfs_distances(&self, source: Node) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.node_count()];
        dist[source as usize] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &v in self.neighbors(u) {
                if dist[v as usize].is_none() {
                    dist[v as usize] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count() <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Largest connected component, nodes re-indexed densely in ascending
    /// order of their original indices. Ties broken by lowest original node.
    pub fn largest_component(&self) -> Graph {
        if self.node_count() == 0 {
            return Graph::empty(0);
        }
        let mut component = vec![usize::MAX; self.node_count()];
        let mut sizes = Vec::new();
        for start in self.nodes() {
            if component[start as usize] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0usize;
            let mut queue = std::collections::VecDeque::from([start]);
            component[start as usize] = id;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &v in self.neighbors(u) {
                    if component[v as usize] == usize::MAX {
                        component[v as usize] = id;
                        queue.push_back(v);
                    }
                }
            }
            sizes.push(size);
        }
        let best = sizes
            .iter()
            .enumerate()
            .max_by_key(|&(id, &size)| (size, usize::MAX - id))
            .map(|(id, _)| id)
            .unwrap();
        let mut remap = vec![Node::MAX; self.node_count()];
        let mut next = 0 as Node;
        for u in 0..self.node_count() {
            if component[u] == best {
                remap[u] = next;
                next += 1;
            }
        }
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if component[u as usize] == best && component[v as usize] == best {
                edges.push((remap[u as usize], remap[v as usize]));
            }
        }
        Graph::from_edges(next as usize, &edges).expect("component edges are valid")
    }

    /// Replaces `old_edge` with `new_edge`. The old edge must exist; the new
    /// edge must be absent and not a self-loop.
    pub fn rewire_edge(
        &self,
        old_edge: (Node, Node),
        new_edge: (Node, Node),
    ) -> Result<Graph, GraphError> {
        let (a, b) = old_edge;
        let (c, d) = new_edge;
        if !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        if c == d {
            return Err(GraphError::SelfLoop(c));
        }
        for w in [c, d] {
            if w as usize >= self.node_count() {
                return Err(GraphError::NodeOutOfRange {
                    node: w,
                    node_count: self.node_count(),
                });
            }
        }
        if self.has_edge(c, d) {
            return Err(GraphError::DuplicateEdge(c, d));
        }
        let mut edges: Vec<(Node, Node)> = self
            .edges()
            .filter(|&(u, v)| (u, v) != (a.min(b), a.max(b)))
            .collect();
        edges.push((c, d));
        Graph::from_edges(self.node_count(), &edges)
    }

    /// Checks the structural invariants; used by tests and debug assertions.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.node_count();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for window in nbrs.windows(2) {
                if window[0] >= window[1] {
                    return Err(format!("adjacency[{u}] is not strictly increasing"));
                }
            }
            for &v in nbrs {
                if v as usize >= n {
                    return Err(format!("neighbor {v} of node {u} out of range"));
                }
                if v as usize == u {
                    return Err(format!("self-loop on node {u}"));
                }
                if !self.adjacency[v as usize].contains(&(u as Node)) {
                    return Err(format!("edge {u}-{v} is not symmetric"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}; ", self.node_count(), self.edge_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(2, &[(1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
        g.validate().unwrap();
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            Graph::from_edges(1, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let comp = two_edges.largest_component();
        assert_eq!(comp.node_count(), 2);
        assert_eq!(comp.edge_count(), 1);
    }

    #[test]
    fn rewire_cycle_to_chord() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let g = c4.rewire_edge((0, 3), (0, 2)).unwrap();
        assert_eq!(g.node_count(), 4);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
        g.validate().unwrap();
    }

    #[test]
    fn rewire_precondition_errors() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(matches!(
            c4.rewire_edge((0, 2), (1, 3)),
            Err(GraphError::MissingEdge(0, 2))
        ));
        assert!(matches!(
            c4.rewire_edge((0, 1), (1, 2)),
            Err(GraphError::DuplicateEdge(1, 2))
        ));
        assert!(matches!(
            c4.rewire_edge((0, 1), (2, 2)),
            Err(GraphError::SelfLoop(2))
        ));
    }

    #[test]
    fn permute_preserves_structure() {
        let g = p3();
        let h = g.permute(&[2, 0, 1]);
        h.validate().unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(2, 0));
        assert!(h.has_edge(0, 1));
    }
}
