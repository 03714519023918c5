//! The atlas collider: exhaustive corpora of small connected graphs,
//! per-descriptor collision accounting, set-membership tallies, collision
//! tuples, and storage statistics.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::bmatrix::{aggregate, bfs_bmatrix, serialize_bmatrix};
use crate::canonical::{canonical_code_masks, graph_from_code, masks_from_code};
use crate::census::{bfs_census, serialize_census, Constituent};
use crate::edgelist::emit_edgelist;
use crate::graph::Graph;
use crate::graph6::{decode_graph6, encode_graph6, Graph6Error};
use crate::key::CanonicalKey;

/// Largest order the built-in enumerator will attempt; bigger corpora must
/// be ingested from graph6 files.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum ColliderError {
    #[error(
        "built-in enumeration covers orders 3..={MAX_ENUMERATION_ORDER}; \
         order {0} must be ingested from a graph6 file"
    )]
    OrderOutOfRange(usize),
    #[error("atlas file error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {source}")]
    MalformedLine { line: usize, source: Graph6Error },
    #[error("line {line}: graph of order {found} in a corpus of order {expected}")]
    MixedOrders {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("corpus entry {index} has {found} nodes, expected order {expected}")]
    Heterogeneous {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("descriptor requires a connected graph")]
    Disconnected,
    #[error("corpus entries {a} and {b} are isomorphic")]
    DuplicateEntry { a: usize, b: usize },
    #[error("membership tallies need census_node, census_edge, and census_stub")]
    MissingCensusDescriptors,
    #[error("unknown descriptor {0:?}")]
    UnknownDescriptor(String),
}

/// One order corpus: every connected non-isomorphic graph of a fixed order.
#[derive(Debug, Clone)]
pub struct AtlasCorpus {
    pub order: usize,
    pub graphs: Vec<Graph>,
}

impl AtlasCorpus {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Newline-separated graph6, one graph per line (trailing newline).
    pub fn to_graph6_lines(&self) -> String {
        let mut out = String::new();
        for g in &self.graphs {
            out.push_str(&encode_graph6(g).expect("atlas orders fit graph6"));
            out.push('\n');
        }
        out
    }

    /// Confirms no two entries are isomorphic (orders within the
    /// canonical-labeling limit only).
    pub fn verify_distinct(&self) -> Result<(), ColliderError> {
        let mut seen: HashMap<CanonicalKey, usize> = HashMap::new();
        for (index, g) in self.graphs.iter().enumerate() {
            let key = crate::canonical::canonical_label(g)
                .expect("verify_distinct is limited to small orders");
            if let Some(&first) = seen.get(&key) {
                return Err(ColliderError::DuplicateEntry { a: first, b: index });
            }
            seen.insert(key, index);
        }
        Ok(())
    }
}

/// Enumerates connected corpora for orders 3..=`max_order` by extending
/// every (n-1)-node graph (disconnected intermediates included — they are
/// parents of connected graphs) with one node over all neighbor subsets,
/// deduplicating by canonical code.
pub fn enumerate_atlas(max_order: usize) -> Result<Vec<AtlasCorpus>, ColliderError> {
    if !(3..=MAX_ENUMERATION_ORDER).contains(&max_order) {
        return Err(ColliderError::OrderOutOfRange(max_order));
    }
    let mut corpora = Vec::new();
    let mut level: Vec<u64> = vec![0]; // the single 1-node graph
    for n in 2..=max_order {
        let mut codes: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&parent| {
                let parent_masks = masks_from_code(n - 1, parent);
                (0u32..1 << (n - 1)).map(move |subset| {
                    let mut masks = parent_masks;
                    masks[n - 1] = subset as u16;
                    for i in 0..n - 1 {
                        if subset & (1 << i) != 0 {
                            masks[i] |= 1 << (n - 1);
                        }
                    }
                    canonical_code_masks(&masks[..n])
                })
            })
            .collect();
        codes.sort_unstable();
        codes.dedup();
        level = codes;
        if n >= 3 {
            let graphs: Vec<Graph> = level
                .iter()
                .map(|&code| graph_from_code(n, code))
                .filter(Graph::is_connected)
                .collect();
            corpora.push(AtlasCorpus { order: n, graphs });
        }
    }
    Ok(corpora)
}

/// Reads a newline-separated graph6 file into a corpus, filtering out
/// disconnected entries. All lines must share one order.
pub fn ingest_atlas(path: &Path) -> Result<AtlasCorpus, ColliderError> {
    let text = std::fs::read_to_string(path)?;
    ingest_atlas_text(&text)
}

pub fn ingest_atlas_text(text: &str) -> Result<AtlasCorpus, ColliderError> {
    let mut order = 0usize;
    let mut graphs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let g = decode_graph6(trimmed)
            .map_err(|source| ColliderError::MalformedLine { line, source })?;
        if graphs.is_empty() && order == 0 {
            order = g.node_count();
        } else if g.node_count() != order {
            return Err(ColliderError::MixedOrders {
                line,
                expected: order,
                found: g.node_count(),
            });
        }
        if g.is_connected() {
            graphs.push(g);
        }
    }
    Ok(AtlasCorpus { order, graphs })
}

/// The descriptors the collider understands. Baselines fully describe a
/// labeled graph but are not invariant, so they join storage statistics
/// only, never collision counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DescriptorId {
    Diameter,
    DegreeSequence,
    CensusNode,
    CensusEdge,
    CensusStub,
    BMatrixNode,
    BMatrixEdge,
    BMatrixStub,
    BfsBMatrix,
    Graph6Baseline,
    EdgelistBaseline,
}

impl DescriptorId {
    pub const ALL: [DescriptorId; 11] = [
        DescriptorId::Diameter,
        DescriptorId::DegreeSequence,
        DescriptorId::CensusNode,
        DescriptorId::CensusEdge,
        DescriptorId::CensusStub,
        DescriptorId::BMatrixNode,
        DescriptorId::BMatrixEdge,
        DescriptorId::BMatrixStub,
        DescriptorId::BfsBMatrix,
        DescriptorId::Graph6Baseline,
        DescriptorId::EdgelistBaseline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DescriptorId::Diameter => "diameter",
            DescriptorId::DegreeSequence => "degree_sequence",
            DescriptorId::CensusNode => "census_node",
            DescriptorId::CensusEdge => "census_edge",
            DescriptorId::CensusStub => "census_stub",
            DescriptorId::BMatrixNode => "bmatrix_node",
            DescriptorId::BMatrixEdge => "bmatrix_edge",
            DescriptorId::BMatrixStub => "bmatrix_stub",
            DescriptorId::BfsBMatrix => "bfs_bmatrix",
            DescriptorId::Graph6Baseline => "graph6_baseline",
            DescriptorId::EdgelistBaseline => "edgelist_baseline",
        }
    }

    pub fn parse(name: &str) -> Result<DescriptorId, ColliderError> {
        DescriptorId::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| ColliderError::UnknownDescriptor(name.to_string()))
    }

    /// Baselines depend on node labeling, so they never count collisions.
    pub fn participates_in_collisions(self) -> bool {
        !matches!(
            self,
            DescriptorId::Graph6Baseline | DescriptorId::EdgelistBaseline
        )
    }
}

/// Connected-graph diameter via per-source BFS.
pub fn diameter_descriptor(g: &Graph) -> Result<u32, ColliderError> {
    let mut diameter = 0;
    for source in g.nodes() {
        for d in g.bfs_distances(source) {
            diameter = diameter.max(d.ok_or(ColliderError::Disconnected)?);
        }
    }
    Ok(diameter)
}

/// Degree multiset sorted descending.
pub fn degree_sequence_descriptor(g: &Graph) -> Vec<usize> {
    g.degree_sequence()
}

/// Serialized form of every requested descriptor for one graph. Each entry
/// is the exact byte string the collider groups and sizes.
fn descriptor_bytes(g: &Graph, descriptors: &[DescriptorId]) -> Vec<Vec<u8>> {
    let needs_census = descriptors.iter().any(|id| {
        matches!(
            id,
            DescriptorId::CensusNode
                | DescriptorId::CensusEdge
                | DescriptorId::CensusStub
                | DescriptorId::BMatrixNode
                | DescriptorId::BMatrixEdge
                | DescriptorId::BMatrixStub
        )
    });
    let triple = needs_census.then(|| bfs_census(g));
    let census_bytes = |constituent| {
        serialize_census(triple.as_ref().unwrap().instance(constituent), true).into_bytes()
    };
    let bmatrix_bytes = |constituent| {
        let ci = triple.as_ref().unwrap().instance(constituent);
        serialize_bmatrix(&aggregate(ci, g.node_count())).into_bytes()
    };
    descriptors
        .iter()
        .map(|id| match id {
            DescriptorId::Diameter => diameter_descriptor(g)
                .expect("corpus graphs are connected")
                .to_string()
                .into_bytes(),
            DescriptorId::DegreeSequence => degree_sequence_descriptor(g)
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
                .into_bytes(),
            DescriptorId::CensusNode => census_bytes(Constituent::Node),
            DescriptorId::CensusEdge => census_bytes(Constituent::Edge),
            DescriptorId::CensusStub => census_bytes(Constituent::Stub),
            DescriptorId::BMatrixNode => bmatrix_bytes(Constituent::Node),
            DescriptorId::BMatrixEdge => bmatrix_bytes(Constituent::Edge),
            DescriptorId::BMatrixStub => bmatrix_bytes(Constituent::Stub),
            DescriptorId::BfsBMatrix => serialize_bmatrix(&bfs_bmatrix(g)).into_bytes(),
            DescriptorId::Graph6Baseline => encode_graph6(g)
                .expect("atlas orders fit graph6")
                .into_bytes(),
            DescriptorId::EdgelistBaseline => emit_edgelist(g).into_bytes(),
        })
        .collect()
}

/// Canonical key of one invariant descriptor for one graph.
pub fn descriptor_key(g: &Graph, id: DescriptorId) -> CanonicalKey {
    assert!(id.participates_in_collisions(), "baselines have no key");
    CanonicalKey::new(descriptor_bytes(g, &[id]).pop().unwrap())
}

/// Pair count of a zero-power descriptor: C(size, 2).
pub fn collision_ceiling(corpus_size: u64) -> u64 {
    corpus_size * corpus_size.saturating_sub(1) / 2
}

/// Which census instantiations a graph collides in; one of eight classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MembershipTag {
    bits: u8,
}

impl MembershipTag {
    pub const ALL: [MembershipTag; 8] = [
        MembershipTag { bits: 0b000 },
        MembershipTag { bits: 0b001 },
        MembershipTag { bits: 0b010 },
        MembershipTag { bits: 0b100 },
        MembershipTag { bits: 0b011 },
        MembershipTag { bits: 0b101 },
        MembershipTag { bits: 0b110 },
        MembershipTag { bits: 0b111 },
    ];

    pub fn new(cn: bool, ce: bool, cs: bool) -> Self {
        MembershipTag {
            bits: cn as u8 | (ce as u8) << 1 | (cs as u8) << 2,
        }
    }

    pub fn has_cn(self) -> bool {
        self.bits & 0b001 != 0
    }

    pub fn has_ce(self) -> bool {
        self.bits & 0b010 != 0
    }

    pub fn has_cs(self) -> bool {
        self.bits & 0b100 != 0
    }

    pub fn name(self) -> &'static str {
        match self.bits {
            0b000 => "none",
            0b001 => "cn",
            0b010 => "ce",
            0b100 => "cs",
            0b011 => "cn_ce",
            0b101 => "cn_cs",
            0b110 => "ce_cs",
            0b111 => "cn_ce_cs",
            _ => unreachable!(),
        }
    }
}

impl Serialize for MembershipTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DescriptorStats {
    pub descriptor: DescriptorId,
    pub collisions: u64,
    pub groups_ge2: u64,
    pub max_group: u64,
    /// group size -> number of groups of that size (singletons included).
    pub group_size_histogram: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StorageStats {
    pub descriptor: DescriptorId,
    pub min_bytes: u64,
    pub median_bytes: u64,
    pub max_bytes: u64,
    /// byte size -> number of graphs.
    pub histogram: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CollisionReport {
    pub order: usize,
    pub corpus_size: u64,
    pub ceiling: u64,
    pub descriptors: Vec<DescriptorStats>,
    pub storage: Vec<StorageStats>,
    /// Per-graph census collision class, corpus index order; empty unless
    /// all three census descriptors were requested.
    pub membership: Vec<MembershipTag>,
}

impl CollisionReport {
    pub fn descriptor(&self, id: DescriptorId) -> Option<&DescriptorStats> {
        self.descriptors.iter().find(|d| d.descriptor == id)
    }

    pub fn storage_for(&self, id: DescriptorId) -> Option<&StorageStats> {
        self.storage.iter().find(|d| d.descriptor == id)
    }
}

fn group_indices_by_key(keys: Vec<Vec<u8>>) -> Vec<Vec<usize>> {
    let mut groups: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    for (index, key) in keys.into_iter().enumerate() {
        groups.entry(key).or_default().push(index);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    groups.sort_unstable_by_key(|g| g[0]);
    groups
}

/// Groups a corpus by canonical key per descriptor and tallies collisions,
/// membership classes, and storage sizes.
///
/// Counting by key grouping is equivalent to literal pairwise comparison —
/// each group of size g contributes C(g, 2) colliding pairs — at linear
/// rather than quadratic cost.
pub fn run_collider(
    corpus: &AtlasCorpus,
    descriptors: &[DescriptorId],
) -> Result<CollisionReport, ColliderError> {
    for (index, g) in corpus.graphs.iter().enumerate() {
        if g.node_count() != corpus.order {
            return Err(ColliderError::Heterogeneous {
                index,
                expected: corpus.order,
                found: g.node_count(),
            });
        }
    }
    let per_graph: Vec<Vec<Vec<u8>>> = corpus
        .graphs
        .par_iter()
        .map(|g| descriptor_bytes(g, descriptors))
        .collect();
    let corpus_size = corpus.graphs.len() as u64;
    let ceiling = collision_ceiling(corpus_size);

    let mut stats = Vec::new();
    let mut census_colliders: HashMap<DescriptorId, Vec<bool>> = HashMap::new();
    for (slot, &id) in descriptors.iter().enumerate() {
        if !id.participates_in_collisions() {
            continue;
        }
        let keys: Vec<Vec<u8>> = per_graph.iter().map(|row| row[slot].clone()).collect();
        let groups = group_indices_by_key(keys);
        let mut histogram = BTreeMap::new();
        let mut collisions = 0u64;
        let mut groups_ge2 = 0u64;
        let mut max_group = 0u64;
        for group in &groups {
            let size = group.len() as u64;
            *histogram.entry(size).or_insert(0) += 1;
            collisions += collision_ceiling(size);
            if size >= 2 {
                groups_ge2 += 1;
            }
            max_group = max_group.max(size);
        }
        if matches!(
            id,
            DescriptorId::CensusNode | DescriptorId::CensusEdge | DescriptorId::CensusStub
        ) {
            let mut collides = vec![false; corpus.graphs.len()];
            for group in groups.iter().filter(|g| g.len() >= 2) {
                for &index in group {
                    collides[index] = true;
                }
            }
            census_colliders.insert(id, collides);
        }
        stats.push(DescriptorStats {
            descriptor: id,
            collisions,
            groups_ge2,
            max_group,
            group_size_histogram: histogram,
        });
    }

    let membership = match (
        census_colliders.get(&DescriptorId::CensusNode),
        census_colliders.get(&DescriptorId::CensusEdge),
        census_colliders.get(&DescriptorId::CensusStub),
    ) {
        (Some(cn), Some(ce), Some(cs)) => (0..corpus.graphs.len())
            .map(|i| MembershipTag::new(cn[i], ce[i], cs[i]))
            .collect(),
        _ => Vec::new(),
    };

    let mut storage = Vec::new();
    for (slot, &id) in descriptors.iter().enumerate() {
        let mut sizes: Vec<u64> = per_graph.iter().map(|row| row[slot].len() as u64).collect();
        sizes.sort_unstable();
        let mut histogram = BTreeMap::new();
        for &size in &sizes {
            *histogram.entry(size).or_insert(0) += 1;
        }
        let (min_bytes, median_bytes, max_bytes) = if sizes.is_empty() {
            (0, 0, 0)
        } else {
            (
                sizes[0],
                sizes[(sizes.len() - 1) / 2],
                sizes[sizes.len() - 1],
            )
        };
        storage.push(StorageStats {
            descriptor: id,
            min_bytes,
            median_bytes,
            max_bytes,
            histogram,
        });
    }

    Ok(CollisionReport {
        order: corpus.order,
        corpus_size,
        ceiling,
        descriptors: stats,
        storage,
        membership,
    })
}

/// Counts report membership over all eight classes, zeros included.
pub fn membership_tally(report: &CollisionReport) -> Result<Vec<(MembershipTag, u64)>, ColliderError> {
    if report.membership.len() != report.corpus_size as usize {
        return Err(ColliderError::MissingCensusDescriptors);
    }
    let mut counts: BTreeMap<MembershipTag, u64> =
        MembershipTag::ALL.iter().map(|&t| (t, 0)).collect();
    for &tag in &report.membership {
        *counts.get_mut(&tag).unwrap() += 1;
    }
    Ok(MembershipTag::ALL.iter().map(|&t| (t, counts[&t])).collect())
}

/// Groups of 2+ non-isomorphic graphs sharing a descriptor value, each graph
/// as its graph6 line. Groups are ordered by first corpus index.
pub fn collision_tuples(
    corpus: &AtlasCorpus,
    descriptor: DescriptorId,
    max_tuples: usize,
) -> Result<Vec<Vec<String>>, ColliderError> {
    assert!(descriptor.participates_in_collisions());
    let keys: Vec<Vec<u8>> = corpus
        .graphs
        .par_iter()
        .map(|g| descriptor_bytes(g, &[descriptor]).pop().unwrap())
        .collect();
    let groups = group_indices_by_key(keys);
    Ok(groups
        .into_iter()
        .filter(|g| g.len() >= 2)
        .take(max_tuples)
        .map(|group| {
            group
                .into_iter()
                .map(|i| encode_graph6(&corpus.graphs[i]).expect("atlas orders fit graph6"))
                .collect()
        })
        .collect())
}

/// Storage statistics alone, for descriptor sets that include baselines.
pub fn storage_stats(
    corpus: &AtlasCorpus,
    descriptors: &[DescriptorId],
) -> Result<Vec<StorageStats>, ColliderError> {
    Ok(run_collider(corpus, descriptors)?.storage)
}

/// `order,descriptor,corpus_size,ceiling,collisions,groups_ge2,max_group`
pub fn collisions_csv(reports: &[CollisionReport]) -> String {
    let mut out = String::from("order,descriptor,corpus_size,ceiling,collisions,groups_ge2,max_group\n");
    for report in reports {
        for stats in &report.descriptors {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                report.order,
                stats.descriptor.name(),
                report.corpus_size,
                report.ceiling,
                stats.collisions,
                stats.groups_ge2,
                stats.max_group
            ));
        }
    }
    out
}

/// `order,tag,count` over all eight membership classes.
pub fn membership_csv(reports: &[CollisionReport]) -> Result<String, ColliderError> {
    let mut out = String::from("order,tag,count\n");
    for report in reports {
        for (tag, count) in membership_tally(report)? {
            out.push_str(&format!("{},{},{}\n", report.order, tag.name(), count));
        }
    }
    Ok(out)
}

/// `order,descriptor,min_bytes,median_bytes,max_bytes`
pub fn storage_csv(reports: &[CollisionReport]) -> String {
    let mut out = String::from("order,descriptor,min_bytes,median_bytes,max_bytes\n");
    for report in reports {
        for stats in &report.storage {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                report.order,
                stats.descriptor.name(),
                stats.min_bytes,
                stats.median_bytes,
                stats.max_bytes
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn corpora_up_to(order: usize) -> Vec<AtlasCorpus> {
        enumerate_atlas(order).unwrap()
    }

    #[test]
    fn enumeration_cardinalities_up_to_six() {
        let corpora = corpora_up_to(6);
        let sizes: Vec<usize> = corpora.iter().map(AtlasCorpus::len).collect();
        assert_eq!(sizes, vec![2, 6, 21, 112]);
        for corpus in &corpora {
            corpus.verify_distinct().unwrap();
            assert!(corpus.graphs.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn enumeration_order_3_is_path_and_triangle() {
        let corpora = corpora_up_to(3);
        let corpus = &corpora[0];
        let mut edge_counts: Vec<usize> =
            corpus.graphs.iter().map(Graph::edge_count).collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![2, 3]);
    }

    #[test]
    fn enumeration_refuses_large_orders() {
        assert!(matches!(
            enumerate_atlas(9),
            Err(ColliderError::OrderOutOfRange(9))
        ));
    }

    #[test]
    fn ingest_round_trip_and_filter() {
        let corpora = corpora_up_to(4);
        let text = corpora[1].to_graph6_lines();
        let back = ingest_atlas_text(&text).unwrap();
        assert_eq!(back.order, 4);
        assert_eq!(back.len(), 6);

        // All 11 order-4 graphs, disconnected included, filter down to 6.
        let pairs = [(0u32, 1u32), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut all = String::new();
        let mut seen = HashSet::new();
        for subset in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| subset & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            let key = crate::canonical::canonical_label(&g).unwrap();
            if seen.insert(key) {
                all.push_str(&encode_graph6(&g).unwrap());
                all.push('\n');
            }
        }
        assert_eq!(all.lines().count(), 11);
        let filtered = ingest_atlas_text(&all).unwrap();
        assert_eq!(filtered.len(), 6);
    }

    #[test]
    fn ingest_errors() {
        assert_eq!(ingest_atlas_text("").unwrap().len(), 0);
        assert!(matches!(
            ingest_atlas_text("Bw\nCw"),
            Err(ColliderError::MixedOrders { line: 2, .. })
        ));
        assert!(matches!(
            ingest_atlas_text("Bw\n!!"),
            Err(ColliderError::MalformedLine { line: 2, .. })
        ));
    }

    #[test]
    fn ceiling_values() {
        assert_eq!(collision_ceiling(2), 1);
        assert_eq!(collision_ceiling(0), 0);
        assert_eq!(collision_ceiling(11_716_571), 68_639_012_140_735);
    }

    #[test]
    fn order_three_has_no_collisions() {
        let corpora = corpora_up_to(3);
        let report = run_collider(&corpora[0], &DescriptorId::ALL).unwrap();
        assert_eq!(report.ceiling, 1);
        for stats in &report.descriptors {
            assert_eq!(stats.collisions, 0, "{}", stats.descriptor.name());
        }
        let tally = membership_tally(&report).unwrap();
        assert_eq!(tally.iter().map(|(_, c)| c).sum::<u64>(), 2);
        assert_eq!(tally[0], (MembershipTag::new(false, false, false), 2));
    }

    #[test]
    fn baseline_descriptors_only_report_storage() {
        let corpora = corpora_up_to(3);
        let report = run_collider(
            &corpora[0],
            &[DescriptorId::Graph6Baseline, DescriptorId::CensusNode],
        )
        .unwrap();
        assert_eq!(report.descriptors.len(), 1);
        assert_eq!(report.storage.len(), 2);
    }

    #[test]
    fn discerning_power_orderings_small_orders() {
        for corpus in corpora_up_to(6) {
            let report = run_collider(&corpus, &DescriptorId::ALL).unwrap();
            let get = |id: DescriptorId| report.descriptor(id).unwrap().collisions;
            assert!(get(DescriptorId::Diameter) >= get(DescriptorId::DegreeSequence));
            assert!(get(DescriptorId::DegreeSequence) >= get(DescriptorId::BMatrixNode));
            assert!(get(DescriptorId::BMatrixNode) >= get(DescriptorId::CensusNode));
            assert!(get(DescriptorId::BMatrixEdge) >= get(DescriptorId::CensusEdge));
            assert!(get(DescriptorId::BMatrixStub) >= get(DescriptorId::CensusStub));
            assert!(get(DescriptorId::CensusNode) >= get(DescriptorId::CensusEdge));
            assert!(get(DescriptorId::CensusEdge) >= get(DescriptorId::CensusStub));
            assert_eq!(get(DescriptorId::CensusStub), 0);
            assert_eq!(
                get(DescriptorId::BfsBMatrix),
                get(DescriptorId::BMatrixNode)
            );
        }
    }

    #[test]
    fn tuples_are_non_isomorphic_groups() {
        let corpora = corpora_up_to(6);
        for corpus in &corpora {
            let tuples =
                collision_tuples(corpus, DescriptorId::CensusStub, usize::MAX).unwrap();
            assert!(tuples.is_empty());
        }
        let diam_tuples =
            collision_tuples(&corpora[3], DescriptorId::Diameter, usize::MAX).unwrap();
        assert!(!diam_tuples.is_empty());
        for group in &diam_tuples {
            assert!(group.len() >= 2);
            let mut keys = HashSet::new();
            for line in group {
                let g = decode_graph6(line).unwrap();
                assert!(keys.insert(crate::canonical::canonical_label(&g).unwrap()));
            }
        }
    }

    #[test]
    fn csv_shapes() {
        let corpora = corpora_up_to(3);
        let report = run_collider(&corpora[0], &DescriptorId::ALL).unwrap();
        let collisions = collisions_csv(std::slice::from_ref(&report));
        assert_eq!(collisions.lines().count(), 1 + 9);
        let membership = membership_csv(std::slice::from_ref(&report)).unwrap();
        assert_eq!(membership.lines().count(), 1 + 8);
        let storage = storage_csv(std::slice::from_ref(&report));
        assert_eq!(storage.lines().count(), 1 + 11);
    }
}
