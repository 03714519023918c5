//! The BFS-Census engine.
//!
//! One breadth-first traversal per source node counts three elementary
//! constituents at every hop: nodes, edges, and stubs (directed half-edges).
//! Per source `s` with frontier `F` (initially `{s}`, every frontier node
//! marked visited on discovery), hop `h` expands `F` and records:
//!
//! * node degree — previously unvisited nodes discovered;
//! * edge degree — edges incident to `F` not yet visited, so each edge is
//!   charged to the first hop at which either endpoint expands;
//! * stub degree — stubs `(u, v)` with `u` in `F` whose complement `(v, u)`
//!   was not counted at an earlier hop. Stubs counted within the current hop
//!   only merge into the visited set after the hop completes, which is why
//!   an edge between two same-depth nodes yields two stubs while an edge
//!   across depths yields one.
//!
//! Collection stops after the hop that discovers no new nodes; that terminal
//! hop is recorded (node entry 0, edge and stub entries possibly nonzero).
//! All three vectors of a source therefore share one length: the source's
//! eccentricity plus one.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Node};
use crate::key::CanonicalKey;

/// Which elementary constituent a census counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Constituent {
    Node,
    Edge,
    Stub,
}

impl Constituent {
    /// Two-letter code used in serialized headers and file names.
    pub fn code(self) -> &'static str {
        match self {
            Constituent::Node => "CN",
            Constituent::Edge => "CE",
            Constituent::Stub => "CS",
        }
    }
}

/// Hop-indexed degree vector for one source node; `values[h - 1]` is the
/// count recorded at hop `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusVector {
    pub source: Node,
    pub values: Vec<u32>,
}

/// Bag of per-source vectors for one constituent, in source index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusInstance {
    pub constituent: Constituent,
    pub vectors: Vec<CensusVector>,
}

impl CensusInstance {
    pub fn vector(&self, source: Node) -> Option<&CensusVector> {
        self.vectors.get(source as usize)
    }

    /// Longest vector length; 0 for an empty instance.
    pub fn max_len(&self) -> usize {
        self.vectors.iter().map(|v| v.values.len()).max().unwrap_or(0)
    }

    pub fn max_value(&self) -> u32 {
        self.vectors
            .iter()
            .flat_map(|v| v.values.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

/// The three censuses of one graph. They share shape: for every source the
/// node, edge, and stub vectors have identical length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTriple {
    pub node_census: CensusInstance,
    pub edge_census: CensusInstance,
    pub stub_census: CensusInstance,
}

impl CensusTriple {
    pub fn instance(&self, constituent: Constituent) -> &CensusInstance {
        match constituent {
            Constituent::Node => &self.node_census,
            Constituent::Edge => &self.edge_census,
            Constituent::Stub => &self.stub_census,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("unknown source node {0}")]
    UnknownSource(Node),
}

/// Flattened adjacency with complement-stub indices, shared by every
/// per-source traversal of one graph.
struct StubIndex {
    offsets: Vec<usize>,
    targets: Vec<Node>,
    /// complement[p] is the flat position of stub (v, u) when p holds (u, v).
    complement: Vec<usize>,
}

impl StubIndex {
    fn build(g: &Graph) -> Self {
        let n = g.node_count();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for u in g.nodes() {
            targets.extend_from_slice(g.neighbors(u));
            offsets.push(targets.len());
        }
        let mut complement = vec![0usize; targets.len()];
        for u in 0..n {
            for p in offsets[u]..offsets[u + 1] {
                let v = targets[p] as usize;
                let back = g.neighbors(v as Node)
                    .binary_search(&(u as Node))
                    .expect("adjacency is symmetric");
                complement[p] = offsets[v] + back;
            }
        }
        StubIndex {
            offsets,
            targets,
            complement,
        }
    }

    fn stubs_of(&self, u: Node) -> std::ops::Range<usize> {
        self.offsets[u as usize]..self.offsets[u as usize + 1]
    }
}

/// Per-thread scratch reused across sources; epoch stamps avoid clearing.
struct Workspace {
    node_seen: Vec<u32>,
    edge_seen: Vec<u32>,
    stub_seen: Vec<u32>,
    frontier: Vec<Node>,
    next: Vec<Node>,
    hop_stubs: Vec<usize>,
    epoch: u32,
}

impl Workspace {
    fn new(node_count: usize, stub_count: usize) -> Self {
        Workspace {
            node_seen: vec![0; node_count],
            edge_seen: vec![0; stub_count],
            stub_seen: vec![0; stub_count],
            frontier: Vec::new(),
            next: Vec::new(),
            hop_stubs: Vec::new(),
            epoch: 0,
        }
    }

    fn collect_vectors(
        &mut self,
        index: &StubIndex,
        source: Node,
    ) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut node_values = Vec::new();
        let mut edge_values = Vec::new();
        let mut stub_values = Vec::new();
        self.frontier.clear();
        self.frontier.push(source);
        self.node_seen[source as usize] = epoch;
        loop {
            let mut node_degree = 0u32;
            let mut edge_degree = 0u32;
            let mut stub_degree = 0u32;
            self.next.clear();
            self.hop_stubs.clear();
            for &u in &self.frontier {
                for p in index.stubs_of(u) {
                    let v = index.targets[p];
                    if self.node_seen[v as usize] != epoch {
                        self.node_seen[v as usize] = epoch;
                        self.next.push(v);
                        node_degree += 1;
                    }
                    let edge_id = p.min(index.complement[p]);
                    if self.edge_seen[edge_id] != epoch {
                        self.edge_seen[edge_id] = epoch;
                        edge_degree += 1;
                    }
                    if self.stub_seen[index.complement[p]] != epoch {
                        stub_degree += 1;
                        self.hop_stubs.push(p);
                    }
                }
            }
            // Stubs counted this hop block complements only from the next
            // hop onwards.
            for &p in &self.hop_stubs {
                self.stub_seen[p] = epoch;
            }
            node_values.push(node_degree);
            edge_values.push(edge_degree);
            stub_values.push(stub_degree);
            if self.next.is_empty() {
                break;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        (node_values, edge_values, stub_values)
    }
}

/// Computes Census-Node, Census-Edge, and Census-Stub for every source node.
///
/// Sources are traversed independently (in parallel for larger graphs) and
/// merged in source index order, so output is identical at any parallelism.
pub fn bfs_census(g: &Graph) -> CensusTriple {
    let index = StubIndex::build(g);
    let n = g.node_count();
    let stub_count = index.targets.len();
    let per_source: Vec<(Vec<u32>, Vec<u32>, Vec<u32>)> = if n >= 128 {
        (0..n as Node)
            .into_par_iter()
            .map_init(
                || Workspace::new(n, stub_count),
                |ws, source| ws.collect_vectors(&index, source),
            )
            .collect()
    } else {
        let mut ws = Workspace::new(n, stub_count);
        (0..n as Node)
            .map(|source| ws.collect_vectors(&index, source))
            .collect()
    };
    let mut node_vectors = Vec::with_capacity(n);
    let mut edge_vectors = Vec::with_capacity(n);
    let mut stub_vectors = Vec::with_capacity(n);
    for (source, (node_values, edge_values, stub_values)) in per_source.into_iter().enumerate() {
        let source = source as Node;
        node_vectors.push(CensusVector {
            source,
            values: node_values,
        });
        edge_vectors.push(CensusVector {
            source,
            values: edge_values,
        });
        stub_vectors.push(CensusVector {
            source,
            values: stub_values,
        });
    }
    CensusTriple {
        node_census: CensusInstance {
            constituent: Constituent::Node,
            vectors: node_vectors,
        },
        edge_census: CensusInstance {
            constituent: Constituent::Edge,
            vectors: edge_vectors,
        },
        stub_census: CensusInstance {
            constituent: Constituent::Stub,
            vectors: stub_vectors,
        },
    }
}

/// Sum of one source's vector: n−1 for Census-Node, e for Census-Edge, and
/// between e and 2e for Census-Stub (connected case).
pub fn census_auc(ci: &CensusInstance, source: Node) -> Result<u64, CensusError> {
    let vector = ci
        .vector(source)
        .ok_or(CensusError::UnknownSource(source))?;
    Ok(vector.values.iter().map(|&v| v as u64).sum())
}

/// Diameter and radius read from vector lengths, with a connectivity flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReachMetrics {
    pub diameter: u32,
    pub radius: u32,
    pub connected: bool,
}

pub fn eccentricity(ct: &CensusTriple, source: Node) -> Result<u32, CensusError> {
    let vector = ct
        .node_census
        .vector(source)
        .ok_or(CensusError::UnknownSource(source))?;
    Ok(vector.values.len() as u32 - 1)
}

/// Per-instance reach metrics: max/min vector length minus one. For a
/// disconnected graph these cover each source's own component only and the
/// flag is false.
pub fn reach_metrics(ct: &CensusTriple) -> ReachMetrics {
    let n = ct.node_census.vectors.len();
    let lengths = ct.node_census.vectors.iter().map(|v| v.values.len() as u32);
    let diameter = lengths.clone().max().map_or(0, |len| len - 1);
    let radius = lengths.min().map_or(0, |len| len - 1);
    let connected = n <= 1
        || ct
            .node_census
            .vectors
            .iter()
            .all(|v| v.values.iter().map(|&x| x as u64).sum::<u64>() == n as u64 - 1);
    ReachMetrics {
        diameter,
        radius,
        connected,
    }
}

pub fn diameter(ct: &CensusTriple) -> u32 {
    reach_metrics(ct).diameter
}

pub fn radius(ct: &CensusTriple) -> u32 {
    reach_metrics(ct).radius
}

/// Sorts vector values by (length, lexicographic), dropping source identity.
fn canonical_value_order(ci: &CensusInstance) -> Vec<&[u32]> {
    let mut rows: Vec<&[u32]> = ci.vectors.iter().map(|v| v.values.as_slice()).collect();
    rows.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    rows
}

/// Serializes an instance: values joined by commas within a vector. The
/// canonical form sorts vectors by (length, lexicographic) and joins them
/// with ';' into a single line; the plain form keeps source index order,
/// one vector per line.
pub fn serialize_census(ci: &CensusInstance, canonical: bool) -> String {
    let join = |rows: Vec<&[u32]>, sep: &str| {
        rows.iter()
            .map(|values| {
                values
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(sep)
    };
    if canonical {
        join(canonical_value_order(ci), ";")
    } else {
        join(ci.vectors.iter().map(|v| v.values.as_slice()).collect(), "\n")
    }
}

/// Byte size of a serialized descriptor.
pub fn measure_bytes(serialized: &str) -> usize {
    serialized.len()
}

/// Key over the multiset of vectors: equal keys exactly when two instances
/// hold the same vectors regardless of source order or labeling.
pub fn canonical_census(ci: &CensusInstance) -> CanonicalKey {
    CanonicalKey::new(serialize_census(ci, true).into_bytes())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusParseError {
    #[error("line {line}: empty vector entry")]
    EmptyVector { line: usize },
    #[error("line {line}: {token:?} is not a degree value")]
    BadToken { line: usize, token: String },
}

/// Parses serialized census text (either form, optional `CN|CE|CS n=<n>`
/// header). Sources are assigned in order of appearance.
pub fn parse_census(text: &str, constituent: Constituent) -> Result<CensusInstance, CensusParseError> {
    let mut body = text.trim_end_matches('\n');
    if let Some(first) = body.lines().next() {
        let is_header = ["CN ", "CE ", "CS "]
            .iter()
            .any(|prefix| first.starts_with(prefix) && first[3..].starts_with("n="));
        if is_header {
            body = &body[first.len()..];
            body = body.strip_prefix('\n').unwrap_or(body);
        }
    }
    let mut vectors = Vec::new();
    if body.is_empty() {
        return Ok(CensusInstance {
            constituent,
            vectors,
        });
    }
    for (idx, row) in body.split(['\n', ';']).enumerate() {
        let line = idx + 1;
        if row.is_empty() {
            return Err(CensusParseError::EmptyVector { line });
        }
        let mut values = Vec::new();
        for token in row.split(',') {
            values.push(token.parse().map_err(|_| CensusParseError::BadToken {
                line,
                token: token.to_string(),
            })?);
        }
        vectors.push(CensusVector {
            source: idx as Node,
            values,
        });
    }
    Ok(CensusInstance {
        constituent,
        vectors,
    })
}
