use netclust_core::graph::parse_edge_list;
use netclust_core::gso::{
    init_group, optimize, optimize_with_workers, producer_scan, ranger_walk, scrounge, step,
    GsoParams, Member, Patience, Role, Streams,
};
use netclust_core::modularity::Evaluator;
use netclust_core::{Graph, Partition};

fn bridged_triangles() -> Graph {
    parse_edge_list("0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n").unwrap()
}

/// 100 nodes on a ring.
fn ring() -> Graph {
    let edges: Vec<_> = (0..100).map(|i| (i, (i + 1) % 100)).collect();
    Graph::from_edges(100, &edges).unwrap()
}

fn hamming(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[test]
fn scrounger_copy_rate() {
    let g = ring();
    let eval = Evaluator::new(&g).unwrap();
    let params = GsoParams {
        scrounger_copy_prob: 0.7,
        ..Default::default()
    };
    let producer = Member::evaluated(&eval, Partition::single(100), Role::Producer);
    let member = Member::evaluated(&eval, Partition::new(vec![1; 100]), Role::Scrounger);
    let streams = Streams::new(31);
    let total: usize = (0..1000)
        .map(|t| {
            let after = scrounge(
                &eval,
                &member,
                &producer,
                &params,
                &mut streams.member(t, 1),
            );
            hamming(after.partition.labels(), producer.partition.labels())
        })
        .sum();
    let mean = total as f64 / 1000.0;
    assert!((27.0..=33.0).contains(&mean), "mean distance {mean}");
}

#[test]
fn ranger_change_rate() {
    let g = ring();
    let eval = Evaluator::new(&g).unwrap();
    // Uniform relabeling over a large label range, so a reassigned node
    // almost always changes.
    let params = GsoParams {
        ranger_walk_rate: 0.1,
        neighbor_move_prob: 0.0,
        kmax: Some(1_000_000),
        ..Default::default()
    };
    let member = Member::evaluated(&eval, Partition::single(100), Role::Ranger);
    let streams = Streams::new(17);
    let total: usize = (0..1000)
        .map(|t| {
            let after = ranger_walk(&eval, &member, &params, &mut streams.member(t, 2));
            hamming(after.partition.labels(), member.partition.labels())
        })
        .sum();
    let mean = total as f64 / 1000.0;
    assert!((8.0..=12.0).contains(&mean), "mean changes {mean}");
}

#[test]
fn scan_escapes_all_in_one() {
    let g = bridged_triangles();
    let eval = Evaluator::new(&g).unwrap();
    let params = GsoParams {
        scan_rates: [0.1, 0.3, 0.5],
        neighbor_move_prob: 0.5,
        patience: 1000,
        ..Default::default()
    };
    let start = Member::evaluated(&eval, Partition::single(6), Role::Producer);
    let hits = (0..100u64)
        .filter(|&seed| {
            let streams = Streams::new(seed);
            let mut patience = Patience::default();
            (1..=100).any(|scan| {
                let after = producer_scan(
                    &eval,
                    &start,
                    &mut patience,
                    &params,
                    &mut streams.member(scan, 0),
                );
                after.fitness > 0.0
            })
        })
        .count();
    assert!(hits > 99, "{hits}/100");
}

#[test]
fn better_scrounger_becomes_producer() {
    let g = bridged_triangles();
    let eval = Evaluator::new(&g).unwrap();
    let params = GsoParams {
        group_size: 5,
        ranger_fraction: 0.0,
        scan_rates: [1e-300; 3],
        scrounger_copy_prob: 1e-300,
        ..Default::default()
    };
    let streams = Streams::new(40);
    let mut group = init_group(&eval, &params, &streams).unwrap();
    let producer = group.producer_index();
    let other = (producer + 1) % 5;
    // The better position sits on a scrounger that keeps it during the bout.
    group.place(&eval, producer, Partition::singletons(6));
    group.place(&eval, other, Partition::new(vec![0, 0, 0, 1, 1, 1]));
    step(&eval, &mut group, &params, &streams);
    assert_eq!(group.producer_index(), other);
    assert_eq!(group.members()[other].role, Role::Producer);
}

#[test]
fn bridged_triangles_reaches_optimum() {
    let g = bridged_triangles();
    let hits = (0..20u64)
        .filter(|&seed| {
            let params = GsoParams {
                group_size: 20,
                iterations: 200,
                kmax: Some(6),
                seed,
                ..Default::default()
            };
            (optimize(&g, &params).unwrap().best_q - 5.0 / 14.0).abs() < 1e-12
        })
        .count();
    assert!(hits >= 18, "{hits}/20");
}

#[test]
fn worker_count_does_not_change_result() {
    let g = parse_edge_list(include_str!("../../../data/dolphins.edgelist")).unwrap();
    let params = GsoParams {
        group_size: 30,
        iterations: 150,
        seed: 5,
        ..Default::default()
    };
    let one = optimize_with_workers(&g, &params, 1).unwrap();
    let four = optimize_with_workers(&g, &params, 4).unwrap();
    assert_eq!(one, four);
    assert_eq!(one, optimize(&g, &params).unwrap());
}
