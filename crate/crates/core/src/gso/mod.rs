//! Group search optimization over label vectors.
//!
//! A group of `m` candidate partitions is evolved for a fixed number of
//! searching bouts. The fittest member is the producer and scans around its
//! own position; scroungers copy labels from the producer; rangers random
//! walk. After every bout the fittest member becomes the producer and the
//! best partition seen so far is recorded.
//!
//! Runs are deterministic in `(graph, params)`: every member draws from its
//! own random substream, so the number of worker threads does not affect the
//! result.

mod group;
mod operators;
mod params;
mod streams;

pub use group::{init_group, step, BestRecord, Group};
pub use operators::{mutate, producer_scan, ranger_walk, scrounge, Member, Patience, Role};
pub use params::GsoParams;
pub use streams::Streams;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::modularity::Evaluator;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub best_q: f64,
    /// Canonical (restricted-growth) labels of the best partition.
    pub best_partition: Partition,
    /// Best-so-far modularity after each bout.
    pub trace: Vec<f64>,
    pub iterations_run: usize,
    pub evaluations: u64,
}

/// Runs the optimizer on the current rayon pool.
pub fn optimize(graph: &Graph, params: &GsoParams) -> Result<RunResult> {
    let eval = Evaluator::new(graph)?;
    let streams = Streams::new(params.seed);
    let mut group = init_group(&eval, params, &streams)?;
    let mut trace = Vec::with_capacity(params.iterations);
    let mut stale = 0;

    for _ in 0..params.iterations {
        let before = group.best().fitness;
        step(&eval, &mut group, params, &streams);
        let best = group.best().fitness;
        trace.push(best);
        stale = if best > before { 0 } else { stale + 1 };
        if params.stagnation_limit.is_some_and(|limit| stale >= limit) {
            break;
        }
    }

    let best = group.best();
    Ok(RunResult {
        best_q: best.fitness,
        best_partition: best.partition.canonicalize(),
        iterations_run: trace.len(),
        trace,
        evaluations: group.evaluations(),
    })
}

/// Runs the optimizer on a dedicated pool of `workers` threads.
pub fn optimize_with_workers(
    graph: &Graph,
    params: &GsoParams,
    workers: usize,
) -> Result<RunResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParam {
            name: "workers",
            reason: e.to_string(),
        })?;
    pool.install(|| optimize(graph, params))
}
