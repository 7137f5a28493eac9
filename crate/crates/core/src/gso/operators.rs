//! Member moves over label vectors: producer scanning, scrounging and
//! ranging.
//!
//! All three share one reassignment rule. A node picked for reassignment
//! adopts the label of a uniformly chosen neighbor with probability
//! `neighbor_move_prob`, and otherwise a label drawn uniformly from
//! `[0, kmax)`. Isolated nodes always take the uniform branch.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::params::GsoParams;
use crate::modularity::Evaluator;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Producer,
    Scrounger,
    Ranger,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub partition: Partition,
    /// Cached modularity of `partition`.
    pub fitness: f64,
    pub role: Role,
}

impl Member {
    pub fn evaluated(eval: &Evaluator<'_>, partition: Partition, role: Role) -> Self {
        let fitness = eval.evaluate(partition.labels());
        Self {
            partition,
            fitness,
            role,
        }
    }
}

/// Unsuccessful-scan bookkeeping for the producer.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Patience {
    counter: usize,
    origin: Option<(Partition, f64)>,
}

impl Patience {
    pub fn counter(&self) -> usize {
        self.counter
    }

    pub fn reset(&mut self) {
        self.counter = 0;
        self.origin = None;
    }
}

/// New label for node `v`, drawn relative to the position `labels`.
pub(crate) fn reassign<R: Rng>(
    labels: &[usize],
    v: usize,
    eval: &Evaluator<'_>,
    params: &GsoParams,
    label_bound: usize,
    rng: &mut R,
) -> usize {
    let neighbors = eval.graph().neighbors(v);
    if !neighbors.is_empty() && rng.random_bool(params.neighbor_move_prob) {
        labels[neighbors[rng.random_range(0..neighbors.len())]]
    } else {
        rng.random_range(0..label_bound)
    }
}

/// Copies `labels` and reassigns each node independently with probability
/// `rate`. Neighbor labels are read from the original position.
pub fn mutate<R: Rng>(
    labels: &[usize],
    rate: f64,
    eval: &Evaluator<'_>,
    params: &GsoParams,
    rng: &mut R,
) -> Vec<usize> {
    let label_bound = params.label_bound(labels.len());
    let mut out = labels.to_vec();
    for v in 0..labels.len() {
        if rng.random_bool(rate) {
            out[v] = reassign(labels, v, eval, params, label_bound, rng);
        }
    }
    out
}

/// One producer scan: `scan_count` candidates at each of the three scan
/// rates. The producer moves only to a strictly better candidate (the first
/// generated among equals). After `patience` consecutive failures it returns
/// to the position it held when the streak started.
pub fn producer_scan<R: Rng>(
    eval: &Evaluator<'_>,
    producer: &Member,
    patience: &mut Patience,
    params: &GsoParams,
    rng: &mut R,
) -> Member {
    let candidates: Vec<Vec<usize>> = params
        .scan_rates
        .iter()
        .flat_map(|&rate| std::iter::repeat_n(rate, params.scan_count))
        .map(|rate| mutate(producer.partition.labels(), rate, eval, params, rng))
        .collect();
    let scores: Vec<f64> = candidates
        .par_iter()
        .map(|labels| eval.evaluate(labels))
        .collect();

    let mut best: Option<usize> = None;
    for (i, &score) in scores.iter().enumerate() {
        if score > best.map_or(producer.fitness, |b| scores[b]) {
            best = Some(i);
        }
    }

    if let Some(i) = best {
        patience.reset();
        let mut candidates = candidates;
        return Member {
            partition: Partition::new(candidates.swap_remove(i)),
            fitness: scores[i],
            role: producer.role,
        };
    }

    if patience.counter == 0 {
        patience.origin = Some((producer.partition.clone(), producer.fitness));
    }
    patience.counter += 1;
    if patience.counter >= params.patience {
        let (partition, fitness) = patience.origin.take().expect("origin recorded");
        patience.counter = 0;
        return Member {
            partition,
            fitness,
            role: producer.role,
        };
    }
    producer.clone()
}

/// Moves a scrounger toward the producer: each label is copied from the
/// producer with probability `scrounger_copy_prob`.
pub fn scrounge<R: Rng>(
    eval: &Evaluator<'_>,
    member: &Member,
    producer: &Member,
    params: &GsoParams,
    rng: &mut R,
) -> Member {
    let labels: Vec<usize> = member
        .partition
        .labels()
        .iter()
        .zip(producer.partition.labels())
        .map(|(&own, &lead)| {
            if rng.random_bool(params.scrounger_copy_prob) {
                lead
            } else {
                own
            }
        })
        .collect();
    Member::evaluated(eval, Partition::new(labels), member.role)
}

/// Unconditional random walk: each node reassigned with probability
/// `ranger_walk_rate`.
pub fn ranger_walk<R: Rng>(
    eval: &Evaluator<'_>,
    member: &Member,
    params: &GsoParams,
    rng: &mut R,
) -> Member {
    let labels = mutate(
        member.partition.labels(),
        params.ranger_walk_rate,
        eval,
        params,
        rng,
    );
    Member::evaluated(eval, Partition::new(labels), member.role)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::gso::streams::Streams;

    fn bridged_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn negligible_scan_rates_leave_producer_in_place() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            scan_rates: [1e-300; 3],
            patience: 100,
            ..Default::default()
        };
        let producer = Member::evaluated(&eval, Partition::single(6), Role::Producer);
        let mut patience = Patience::default();
        let mut rng = Streams::new(1).member(1, 0);
        let after = producer_scan(&eval, &producer, &mut patience, &params, &mut rng);
        assert_eq!(after, producer);
        assert_eq!(patience.counter(), 1);
    }

    #[test]
    fn optimum_producer_never_degrades() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams::default();
        let optimum = Partition::new(vec![0, 0, 0, 1, 1, 1]);
        let mut producer = Member::evaluated(&eval, optimum, Role::Producer);
        let mut patience = Patience::default();
        for bout in 0..500 {
            let mut rng = Streams::new(9).member(bout, 0);
            producer = producer_scan(&eval, &producer, &mut patience, &params, &mut rng);
            assert!((producer.fitness - 5.0 / 14.0).abs() < 1e-12);
            assert!(patience.counter() < params.patience);
        }
    }

    #[test]
    fn patience_restores_streak_origin() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            scan_rates: [1e-300; 3],
            patience: 3,
            ..Default::default()
        };
        let producer = Member::evaluated(&eval, Partition::single(6), Role::Producer);
        let mut patience = Patience::default();
        let mut rng = Streams::new(3).member(1, 0);
        for expected in [1, 2, 0, 1] {
            let after = producer_scan(&eval, &producer, &mut patience, &params, &mut rng);
            assert_eq!(after, producer);
            assert_eq!(patience.counter(), expected);
        }
    }

    #[test]
    fn full_copy_scrounger_matches_producer() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            scrounger_copy_prob: 1.0,
            ..Default::default()
        };
        let producer = Member::evaluated(
            &eval,
            Partition::new(vec![0, 0, 0, 1, 1, 1]),
            Role::Producer,
        );
        let member = Member::evaluated(&eval, Partition::singletons(6), Role::Scrounger);
        let mut rng = Streams::new(5).member(1, 2);
        let after = scrounge(&eval, &member, &producer, &params, &mut rng);
        assert_eq!(after.partition, producer.partition);
        assert_eq!(after.fitness, producer.fitness);
        assert_eq!(after.role, Role::Scrounger);
    }

    #[test]
    fn negligible_copy_prob_keeps_scrounger() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            scrounger_copy_prob: 1e-300,
            ..Default::default()
        };
        let producer = Member::evaluated(
            &eval,
            Partition::new(vec![0, 0, 0, 1, 1, 1]),
            Role::Producer,
        );
        let member = Member::evaluated(&eval, Partition::singletons(6), Role::Scrounger);
        let mut rng = Streams::new(5).member(1, 2);
        assert_eq!(
            scrounge(&eval, &member, &producer, &params, &mut rng),
            member
        );
    }

    #[test]
    fn ranger_with_single_label_collapses() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            ranger_walk_rate: 1.0,
            kmax: Some(1),
            neighbor_move_prob: 0.0,
            ..Default::default()
        };
        let member = Member::evaluated(&eval, Partition::singletons(6), Role::Ranger);
        let mut rng = Streams::new(8).member(1, 4);
        let after = ranger_walk(&eval, &member, &params, &mut rng);
        assert_eq!(after.partition, Partition::single(6));
        assert_eq!(after.fitness, 0.0);
    }

    #[test]
    fn negligible_walk_rate_keeps_ranger() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            ranger_walk_rate: 1e-300,
            ..Default::default()
        };
        let member = Member::evaluated(&eval, Partition::singletons(6), Role::Ranger);
        let mut rng = Streams::new(8).member(1, 4);
        assert_eq!(ranger_walk(&eval, &member, &params, &mut rng), member);
    }

    #[test]
    fn neighbor_moves_take_neighbor_labels() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            neighbor_move_prob: 1.0,
            ..Default::default()
        };
        let labels = vec![10, 11, 12, 13, 14, 15];
        let mut rng = Streams::new(2).member(0, 0);
        for _ in 0..200 {
            let out = mutate(&labels, 1.0, &eval, &params, &mut rng);
            for v in 0..6 {
                assert!(g.neighbors(v).iter().any(|&u| labels[u] == out[v]));
            }
        }
    }
}
