//! Graph invariant descriptors built around the BFS-Census traversal.
//!
//! One BFS per source node counts nodes, edges, and stubs (half-edges) at
//! every hop, producing the Census-Node, Census-Edge, and Census-Stub
//! descriptors plus their BMatrix aggregations. A collider evaluates how
//! well each descriptor separates non-isomorphic graphs over exhaustively
//! enumerated small-graph corpora, and a plotting module renders the
//! descriptors as deterministic SVG.

pub mod bmatrix;
pub mod canonical;
pub mod census;
pub mod collider;
pub mod edgelist;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod key;
pub mod viz;

pub use bmatrix::{aggregate, bfs_bmatrix, canonical_bmatrix, serialize_bmatrix, BMatrix};
pub use canonical::{canonical_label, canonical_label_with_limit, CanonicalLimitError};
pub use census::{
    bfs_census, canonical_census, census_auc, diameter, eccentricity, measure_bytes,
    parse_census, radius, reach_metrics, serialize_census, CensusInstance, CensusTriple,
    CensusVector, Constituent, ReachMetrics,
};
pub use collider::{
    collision_ceiling, collision_tuples, enumerate_atlas, ingest_atlas, membership_tally,
    run_collider, storage_stats, AtlasCorpus, ColliderError, CollisionReport, DescriptorId,
    MembershipTag,
};
pub use edgelist::{emit_edgelist, parse_edgelist, EdgelistError};
pub use generators::{
    complete_graph, cycle_graph, desargues, dodecahedron, gen_barabasi_albert, gen_erdos_renyi,
    gen_random_tree, gen_stochastic_block, gen_watts_strogatz, generalized_petersen, path_graph,
    star_graph, GeneratorError, SeededRng,
};
pub use graph::{Graph, GraphError, Node};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error, MAX_GRAPH6_NODES};
pub use key::CanonicalKey;
pub use viz::{
    census_census_plot, circular_node_link, heatmap_plot, hop_census_plot, superimpose,
    CensusLayer, ColorMode, PlotOptions, SvgDocument, VizError,
};
