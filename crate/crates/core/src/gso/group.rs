use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;

use super::operators::{producer_scan, ranger_walk, scrounge, Member, Patience, Role};
use super::params::GsoParams;
use super::streams::Streams;
use crate::error::Result;
use crate::modularity::Evaluator;
use crate::partition::Partition;

/// Best position seen so far.
#[derive(Debug, Clone, PartialEq)]
pub struct BestRecord {
    pub fitness: f64,
    pub partition: Partition,
}

/// The population: one producer, the rest scroungers or rangers.
#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    members: Vec<Member>,
    producer: usize,
    best: BestRecord,
    patience: Patience,
    bouts: u64,
    evaluations: u64,
}

impl Group {
    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn producer_index(&self) -> usize {
        self.producer
    }

    pub fn producer(&self) -> &Member {
        &self.members[self.producer]
    }

    pub fn best(&self) -> &BestRecord {
        &self.best
    }

    pub fn patience(&self) -> &Patience {
        &self.patience
    }

    /// Completed searching bouts.
    pub fn bouts(&self) -> u64 {
        self.bouts
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// Replaces one member's position, re-evaluating it. Intended for
    /// seeding known positions; roles are re-derived.
    pub fn place(&mut self, eval: &Evaluator<'_>, index: usize, partition: Partition) {
        let role = self.members[index].role;
        self.members[index] = Member::evaluated(eval, partition, role);
        let previous = self.producer;
        self.producer = argmax(&self.members);
        if self.producer != previous {
            self.members.swap_roles(previous, self.producer);
            self.patience.reset();
        }
        self.record_best();
    }

    fn record_best(&mut self) {
        let producer = &self.members[self.producer];
        if producer.fitness > self.best.fitness {
            self.best = BestRecord {
                fitness: producer.fitness,
                partition: producer.partition.clone(),
            };
        }
    }
}

trait SwapRoles {
    fn swap_roles(&mut self, a: usize, b: usize);
}

impl SwapRoles for Vec<Member> {
    fn swap_roles(&mut self, a: usize, b: usize) {
        let role = self[a].role;
        self[a].role = self[b].role;
        self[b].role = role;
    }
}

/// Index of the fittest member, lowest index on ties.
fn argmax(members: &[Member]) -> usize {
    let mut best = 0;
    for (i, m) in members.iter().enumerate().skip(1) {
        if m.fitness > members[best].fitness {
            best = i;
        }
    }
    best
}

/// Marks `producer` and draws the rangers uniformly among the others.
fn assign_roles<R: Rng>(members: &mut [Member], producer: usize, rangers: usize, rng: &mut R) {
    let others: Vec<usize> = (0..members.len()).filter(|&i| i != producer).collect();
    for &i in &others {
        members[i].role = Role::Scrounger;
    }
    members[producer].role = Role::Producer;
    for pick in sample(rng, others.len(), rangers) {
        members[others[pick]].role = Role::Ranger;
    }
}

/// Random initial population with labels drawn uniformly from `[0, kmax)`.
pub fn init_group(eval: &Evaluator<'_>, params: &GsoParams, streams: &Streams) -> Result<Group> {
    params.validate()?;
    let n = eval.graph().node_count();
    let bound = params.label_bound(n);
    let mut members: Vec<Member> = (0..params.group_size)
        .into_par_iter()
        .map(|i| {
            let mut rng = streams.member(0, i);
            let labels = (0..n).map(|_| rng.random_range(0..bound)).collect();
            Member::evaluated(eval, Partition::new(labels), Role::Scrounger)
        })
        .collect();
    let producer = argmax(&members);
    assign_roles(
        &mut members,
        producer,
        params.ranger_count(),
        &mut streams.control(0),
    );
    let best = BestRecord {
        fitness: members[producer].fitness,
        partition: members[producer].partition.clone(),
    };
    Ok(Group {
        members,
        producer,
        best,
        patience: Patience::default(),
        bouts: 0,
        evaluations: params.group_size as u64,
    })
}

/// One searching bout: producer scan, scrounging, ranging, producer
/// re-selection, ranger re-draw, best-record update.
pub fn step(eval: &Evaluator<'_>, group: &mut Group, params: &GsoParams, streams: &Streams) {
    let bout = group.bouts + 1;
    let producer_index = group.producer;

    let scanned = producer_scan(
        eval,
        &group.members[producer_index],
        &mut group.patience,
        params,
        &mut streams.member(bout, producer_index),
    );
    group.members[producer_index] = scanned;

    let (before, rest) = group.members.split_at_mut(producer_index);
    let (producer, after) = rest.split_first_mut().expect("producer in range");
    let producer: &Member = producer;
    before
        .par_iter_mut()
        .enumerate()
        .chain(
            after
                .par_iter_mut()
                .enumerate()
                .map(|(i, m)| (i + producer_index + 1, m)),
        )
        .for_each(|(i, member)| {
            let mut rng = streams.member(bout, i);
            *member = match member.role {
                Role::Scrounger => scrounge(eval, member, producer, params, &mut rng),
                Role::Ranger => ranger_walk(eval, member, params, &mut rng),
                Role::Producer => unreachable!("only one producer"),
            };
        });

    let next = argmax(&group.members);
    if next != producer_index {
        group.patience.reset();
    }
    group.producer = next;
    assign_roles(
        &mut group.members,
        next,
        params.ranger_count(),
        &mut streams.control(bout),
    );
    group.record_best();
    group.bouts = bout;
    group.evaluations += (3 * params.scan_count + params.group_size - 1) as u64;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::Graph;

    fn bridged_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).unwrap()
    }

    fn count(group: &Group, role: Role) -> usize {
        group.members().iter().filter(|m| m.role == role).count()
    }

    #[test]
    fn init_structure() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            group_size: 5,
            kmax: Some(4),
            ..Default::default()
        };
        let group = init_group(&eval, &params, &Streams::new(11)).unwrap();
        assert_eq!(group.members().len(), 5);
        assert!(group.members().iter().all(|m| m.partition.len() == 4));
        assert_eq!(count(&group, Role::Producer), 1);
        assert_eq!(count(&group, Role::Ranger), 2);
        assert_eq!(group.members()[group.producer_index()].role, Role::Producer);
        assert_eq!(group.best().fitness, group.producer().fitness);
    }

    #[test]
    fn init_without_rangers() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            group_size: 5,
            ranger_fraction: 0.0,
            ..Default::default()
        };
        let group = init_group(&eval, &params, &Streams::new(1)).unwrap();
        assert_eq!(count(&group, Role::Ranger), 0);
        assert_eq!(count(&group, Role::Scrounger), 4);
    }

    #[test]
    fn init_is_deterministic() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams::default();
        let a = init_group(&eval, &params, &Streams::new(77)).unwrap();
        let b = init_group(&eval, &params, &Streams::new(77)).unwrap();
        assert_eq!(a, b);
        let c = init_group(&eval, &params, &Streams::new(78)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn init_rejects_tiny_group() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            group_size: 2,
            ..Default::default()
        };
        assert!(matches!(
            init_group(&eval, &params, &Streams::new(1)),
            Err(Error::InvalidParam {
                name: "group_size",
                ..
            })
        ));
    }

    #[test]
    fn producer_at_optimum_keeps_record() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            group_size: 10,
            ..Default::default()
        };
        let streams = Streams::new(4);
        let mut group = init_group(&eval, &params, &streams).unwrap();
        group.place(&eval, 3, Partition::new(vec![0, 0, 0, 1, 1, 1]));
        assert_eq!(group.producer_index(), 3);
        let optimum = group.best().fitness;
        assert!((optimum - 5.0 / 14.0).abs() < 1e-12);
        for _ in 0..200 {
            step(&eval, &mut group, &params, &streams);
            assert_eq!(group.best().fitness, optimum);
        }
    }

    #[test]
    fn producer_tie_goes_to_lowest_index() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            group_size: 4,
            ranger_fraction: 0.0,
            scan_rates: [1e-300; 3],
            ..Default::default()
        };
        let streams = Streams::new(2);
        let mut group = init_group(&eval, &params, &streams).unwrap();
        // Producer at the optimum; a scrounger copying it fully reaches it too
        // but must not displace the lower-indexed producer on a tie.
        group.place(&eval, 2, Partition::new(vec![0, 0, 0, 1, 1, 1]));
        group.place(&eval, 0, Partition::singletons(6));
        let mut full_copy = params.clone();
        full_copy.scrounger_copy_prob = 1.0;
        step(&eval, &mut group, &full_copy, &streams);
        // All scroungers now equal the producer; argmax tie goes to index 0.
        assert_eq!(group.producer_index(), 0);
        assert_eq!(group.members()[0].role, Role::Producer);
        assert!((group.producer().fitness - 5.0 / 14.0).abs() < 1e-12);
    }

    #[test]
    fn evaluation_count_tracks_formula() {
        let g = bridged_triangles();
        let eval = Evaluator::new(&g).unwrap();
        let params = GsoParams {
            group_size: 7,
            scan_count: 2,
            ..Default::default()
        };
        let streams = Streams::new(6);
        let mut group = init_group(&eval, &params, &streams).unwrap();
        for _ in 0..9 {
            step(&eval, &mut group, &params, &streams);
        }
        assert_eq!(group.evaluations(), params.evaluations_for(9));
    }
}
