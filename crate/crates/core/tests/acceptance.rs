//! Acceptance suite: one test per release criterion, each printing a
//! `acceptance criterion NN (...): PASS` line on success (visible with
//! `cargo test --test acceptance -- --nocapture`).

mod common;

use std::sync::LazyLock;

use census_core::{
    aggregate, bfs_bmatrix, bfs_census, canonical_bmatrix, canonical_census, census_auc,
    collision_ceiling, complete_graph, desargues, dodecahedron, enumerate_atlas,
    gen_barabasi_albert, gen_erdos_renyi, gen_random_tree, gen_watts_strogatz, membership_tally,
    run_collider, AtlasCorpus, CollisionReport, Constituent, DescriptorId, Graph, MembershipTag,
    SeededRng,
};
use common::{generator_battery, random_graph, random_permutation};

static ATLAS: LazyLock<Vec<AtlasCorpus>> =
    LazyLock::new(|| enumerate_atlas(8).expect("orders 3..=8 enumerate"));

static REPORTS: LazyLock<Vec<CollisionReport>> = LazyLock::new(|| {
    ATLAS
        .iter()
        .map(|corpus| run_collider(corpus, &DescriptorId::ALL).expect("homogeneous corpus"))
        .collect()
});

static BATTERY: LazyLock<Vec<Graph>> = LazyLock::new(generator_battery);

fn pass(number: u32, name: &str) {
    println!("acceptance criterion {number:02} ({name}): PASS");
}

fn atlas_orders_3_to_7() -> impl Iterator<Item = &'static AtlasCorpus> {
    ATLAS.iter().filter(|c| c.order <= 7)
}

#[test]
fn criterion_01_atlas_cardinalities() {
    let started = std::time::Instant::now();
    let sizes: Vec<usize> = ATLAS.iter().map(AtlasCorpus::len).collect();
    assert_eq!(sizes, vec![2, 6, 21, 112, 853, 11117]);
    assert!(matches!(
        enumerate_atlas(9),
        Err(census_core::ColliderError::OrderOutOfRange(9))
    ));
    println!("atlas orders 3..=8 built in {:.1?}", started.elapsed());
    pass(1, "atlas cardinalities 2, 6, 21, 112, 853, 11117");
}

#[test]
fn criterion_02_integrity_oracle() {
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for corpus in ATLAS.iter() {
        for g in &corpus.graphs {
            let ct = bfs_census(g);
            if bfs_bmatrix(g) != aggregate(&ct.node_census, g.node_count()) {
                mismatches += 1;
            }
            checked += 1;
        }
    }
    assert_eq!(BATTERY.len(), 50);
    for g in BATTERY.iter() {
        let ct = bfs_census(g);
        if bfs_bmatrix(g) != aggregate(&ct.node_census, g.node_count()) {
            mismatches += 1;
        }
        checked += 1;
    }
    assert_eq!(mismatches, 0, "{mismatches} of {checked} graphs disagreed");
    pass(2, "shell-matrix oracle identical to census aggregation");
}

#[test]
fn criterion_03_discerning_power_ordering() {
    for report in REPORTS.iter() {
        let get = |id: DescriptorId| {
            report
                .descriptor(id)
                .unwrap_or_else(|| panic!("{} missing", id.name()))
                .collisions
        };
        let order = report.order;
        assert!(
            get(DescriptorId::Diameter) >= get(DescriptorId::DegreeSequence),
            "order {order}: diameter < degree_sequence"
        );
        assert!(
            get(DescriptorId::DegreeSequence) >= get(DescriptorId::BMatrixNode),
            "order {order}: degree_sequence < bmatrix_node"
        );
        assert!(
            get(DescriptorId::BMatrixNode) >= get(DescriptorId::CensusNode),
            "order {order}: bmatrix_node < census_node"
        );
        assert!(
            get(DescriptorId::BMatrixEdge) >= get(DescriptorId::CensusEdge),
            "order {order}: bmatrix_edge < census_edge"
        );
        assert!(
            get(DescriptorId::BMatrixStub) >= get(DescriptorId::CensusStub),
            "order {order}: bmatrix_stub < census_stub"
        );
        assert!(
            get(DescriptorId::CensusNode) >= get(DescriptorId::CensusEdge)
                && get(DescriptorId::CensusEdge) >= get(DescriptorId::CensusStub),
            "order {order}: census family not node >= edge >= stub"
        );
        assert!(
            get(DescriptorId::BMatrixNode) >= get(DescriptorId::BMatrixEdge)
                && get(DescriptorId::BMatrixEdge) >= get(DescriptorId::BMatrixStub),
            "order {order}: bmatrix family not node >= edge >= stub"
        );
    }
    pass(3, "collision ordering over orders 3..=8");
}

#[test]
fn criterion_04_census_stub_perfection_at_small_orders() {
    let all_three = MembershipTag::new(true, true, true);
    for report in REPORTS.iter() {
        let stub = report.descriptor(DescriptorId::CensusStub).unwrap();
        let tally = membership_tally(report).unwrap();
        let total: u64 = tally.iter().map(|&(_, count)| count).sum();
        assert_eq!(total, report.corpus_size, "tally partitions the corpus");
        let triple_count = tally
            .iter()
            .find(|(tag, _)| *tag == all_three)
            .map(|&(_, count)| count)
            .unwrap();
        if report.order <= 7 {
            assert_eq!(
                stub.collisions, 0,
                "order {}: census_stub collided",
                report.order
            );
            assert_eq!(triple_count, 0, "order {}", report.order);
        } else {
            assert!(
                triple_count > 0,
                "order 8 should populate the cn_ce_cs class"
            );
            println!("order 8 cn_ce_cs class holds {triple_count} graphs");
            let node = report.descriptor(DescriptorId::CensusNode).unwrap();
            assert!(node.groups_ge2 >= 1, "order 8 census_node collision tuples");
        }
    }
    pass(4, "census_stub collision-free through order 7; cn_ce_cs first at 8");
}

#[test]
fn criterion_05_dodecahedron_desargues_discernment() {
    let (a, b) = (dodecahedron(), desargues());
    let (ct_a, ct_b) = (bfs_census(&a), bfs_census(&b));
    let portrait_a = canonical_bmatrix(&aggregate(&ct_a.node_census, 20));
    let portrait_b = canonical_bmatrix(&aggregate(&ct_b.node_census, 20));
    assert_eq!(portrait_a, portrait_b, "matrix portraits must collide");
    assert_ne!(
        canonical_census(&ct_a.stub_census),
        canonical_census(&ct_b.stub_census),
        "census_stub must separate the pair"
    );
    pass(5, "dodecahedron vs desargues: portraits collide, stub census discerns");
}

#[test]
fn criterion_06_auc_identities() {
    let mut graphs: Vec<Graph> = Vec::new();
    for corpus in ATLAS.iter() {
        graphs.extend(corpus.graphs.iter().cloned());
    }
    let mut rng = SeededRng::new(0xA0C);
    for _ in 0..200 {
        let n = 8 + rng.next_below(43) as usize; // up to 50 nodes
        let p = 0.05 + 0.4 * rng.next_f64();
        let g = gen_erdos_renyi(n, p, rng.next_u64())
            .unwrap()
            .largest_component();
        graphs.push(g);
    }
    for g in &graphs {
        let n = g.node_count() as u64;
        let e = g.edge_count() as u64;
        let ct = bfs_census(g);
        for s in 0..g.node_count() as u32 {
            assert_eq!(census_auc(&ct.node_census, s).unwrap(), n - 1);
            assert_eq!(census_auc(&ct.edge_census, s).unwrap(), e);
            let stub = census_auc(&ct.stub_census, s).unwrap();
            assert!(stub >= e && stub <= 2 * e, "stub auc {stub} outside [e, 2e]");
        }
    }
    pass(6, "AUC identities: n-1, e, and the stub band");
}

#[test]
fn criterion_07_isomorphism_invariance() {
    let invariants: Vec<DescriptorId> = DescriptorId::ALL
        .into_iter()
        .filter(|id| id.participates_in_collisions())
        .collect();
    let mut rng = SeededRng::new(0x150);
    let mut failures = 0usize;
    for _ in 0..1000 {
        let g = random_graph(8, &mut rng).largest_component();
        let perm = random_permutation(g.node_count(), &mut rng);
        let h = g.permute(&perm);
        for &id in &invariants {
            if census_core::collider::descriptor_key(&g, id)
                != census_core::collider::descriptor_key(&h, id)
            {
                failures += 1;
            }
        }
    }
    assert_eq!(failures, 0);
    pass(7, "1000 permutation trials, every descriptor key stable");
}

#[test]
fn criterion_08_bmatrix_row_sums() {
    let mut graphs: Vec<Graph> = Vec::new();
    for corpus in atlas_orders_3_to_7() {
        graphs.extend(corpus.graphs.iter().cloned());
    }
    graphs.extend(BATTERY.iter().cloned());
    for g in &graphs {
        let n = g.node_count() as u64;
        let ct = bfs_census(g);
        for constituent in [Constituent::Node, Constituent::Edge, Constituent::Stub] {
            let b = aggregate(ct.instance(constituent), g.node_count());
            assert!(
                b.row_sums().into_iter().all(|s| s == n),
                "aggregate rows for {constituent:?} on {g:?}"
            );
        }
        assert!(bfs_bmatrix(g).row_sums().into_iter().all(|s| s == n));
    }
    pass(8, "every matrix row sums to the node count");
}

#[test]
fn criterion_09_generator_edge_counts() {
    for seed in 0..5 {
        let ws = gen_watts_strogatz(1500, 32, 0.09, seed).unwrap();
        assert_eq!(ws.edge_count(), 24_000);
        let ba = gen_barabasi_albert(1500, 16, seed).unwrap();
        assert_eq!(ba.edge_count(), 23_744);
    }
    // Binomial expectation p * C(1500, 2) = 22485, sigma = sqrt(np(1-p)).
    let expected = 0.02 * 1_124_250.0;
    let sigma = (1_124_250.0f64 * 0.02 * 0.98).sqrt();
    for seed in 0..20 {
        let er = gen_erdos_renyi(1500, 0.02, seed).unwrap();
        let deviation = (er.edge_count() as f64 - expected).abs();
        assert!(
            deviation <= 3.0 * sigma,
            "seed {seed}: {} edges deviates {deviation:.1} > 3 sigma ({:.1})",
            er.edge_count(),
            3.0 * sigma
        );
    }
    pass(9, "WS 24000 exact, BA 23744 exact, ER within 3 sigma over 20 seeds");
}

#[test]
fn criterion_10_phase_extremes() {
    for seed in 0..10u64 {
        let n = 10 + seed as usize * 10; // 10..=100
        let tree = gen_random_tree(n, seed);
        let ct = bfs_census(&tree);
        for s in 0..n {
            assert_eq!(
                ct.node_census.vectors[s].values, ct.stub_census.vectors[s].values,
                "tree trajectory left the diagonal"
            );
        }
    }
    for n in [5usize, 10, 25] {
        let ct = bfs_census(&complete_graph(n));
        let fan_out = (n - 1) as u32;
        for s in 0..n {
            assert_eq!(ct.node_census.vectors[s].values, vec![fan_out, 0]);
            let stub = &ct.stub_census.vectors[s].values;
            assert_eq!(stub.len(), 2);
            assert_eq!(stub[0], fan_out);
            assert!(stub[1] > 0, "terminal stub count must stay positive");
            assert_eq!(stub[1], fan_out * (n as u32 - 2));
        }
    }
    pass(10, "trees on the diagonal, complete graphs anti-diagonal");
}

#[test]
fn criterion_11_collision_count_oracle_equivalence() {
    let invariants: Vec<DescriptorId> = DescriptorId::ALL
        .into_iter()
        .filter(|id| id.participates_in_collisions())
        .collect();
    for corpus in ATLAS.iter().filter(|c| c.order <= 5) {
        let report = run_collider(corpus, &invariants).unwrap();
        for &id in &invariants {
            let keys: Vec<_> = corpus
                .graphs
                .iter()
                .map(|g| census_core::collider::descriptor_key(g, id))
                .collect();
            let mut pairwise = 0u64;
            for i in 0..keys.len() {
                for j in i + 1..keys.len() {
                    if keys[i] == keys[j] {
                        pairwise += 1;
                    }
                }
            }
            assert_eq!(
                report.descriptor(id).unwrap().collisions,
                pairwise,
                "order {} descriptor {}",
                corpus.order,
                id.name()
            );
            assert!(pairwise <= collision_ceiling(corpus.len() as u64));
        }
    }
    pass(11, "hash-group counts equal literal pairwise comparison, orders 3..=5");
}
