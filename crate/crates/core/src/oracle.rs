//! Ground truth for small graphs: exhaustive set-partition enumeration,
//! brute-force modularity maximization, and a greedy agglomerative baseline.
//!
//! Scores here are kept in exact integer form. For a partition with
//! intra-community edge counts `L_c` and degree totals `D_c` on a graph with
//! `m` edges, `4m²·Q = 4m·ΣL_c − ΣD_c²`, so comparisons and tie-breaks never
//! depend on rounding.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::modularity::modularity;
use crate::partition::Partition;

pub const MAX_ENUMERATE: usize = 14;
pub const MAX_BRUTE_FORCE: usize = 12;

/// Iterates over all set partitions of `0..n` as restricted-growth strings,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct PartitionIterator {
    current: Vec<usize>,
    // prefix_max[i] = max(current[..i]), prefix_max[0] unused.
    prefix_max: Vec<usize>,
    done: bool,
}

impl PartitionIterator {
    fn new(n: usize) -> Self {
        Self {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.current.len();
        let Some(i) = (1..n)
            .rev()
            .find(|&i| self.current[i] <= self.prefix_max[i])
        else {
            self.done = true;
            return;
        };
        self.current[i] += 1;
        let top = self.prefix_max[i].max(self.current[i]);
        for j in i + 1..n {
            self.current[j] = 0;
            self.prefix_max[j] = top;
        }
    }
}

impl Iterator for PartitionIterator {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::new(self.current.clone());
        self.advance();
        Some(out)
    }
}

pub fn enumerate_partitions(n: usize) -> Result<PartitionIterator> {
    if !(1..=MAX_ENUMERATE).contains(&n) {
        return Err(Error::OracleRange {
            n,
            max: MAX_ENUMERATE,
        });
    }
    Ok(PartitionIterator::new(n))
}

/// `4m²·Q` for the given labels, exactly.
pub fn scaled_modularity(graph: &Graph, labels: &[usize]) -> i64 {
    let bound = labels.iter().copied().max().map_or(0, |l| l + 1);
    let mut intra = 0i64;
    let mut degree = vec![0i64; bound];
    for &(u, v) in graph.edges() {
        if labels[u] == labels[v] {
            intra += 1;
        }
        degree[labels[u]] += 1;
        degree[labels[v]] += 1;
    }
    let m = graph.edge_count() as i64;
    4 * m * intra - degree.iter().map(|d| d * d).sum::<i64>()
}

/// Exhaustive argmax of modularity. Ties go to the partition enumerated
/// first.
pub fn brute_force_max_modularity(graph: &Graph) -> Result<(f64, Partition)> {
    let n = graph.node_count();
    if n > MAX_BRUTE_FORCE {
        return Err(Error::OracleRange {
            n,
            max: MAX_BRUTE_FORCE,
        });
    }
    if graph.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best: Option<(i64, Partition)> = None;
    for p in enumerate_partitions(n)? {
        let score = scaled_modularity(graph, p.labels());
        if best.as_ref().is_none_or(|(s, _)| score > *s) {
            best = Some((score, p));
        }
    }
    let (score, partition) = best.expect("at least one partition");
    let m = graph.edge_count() as f64;
    Ok((score as f64 / (4.0 * m * m), partition))
}

/// Agglomerative baseline: start from singletons and keep merging the pair
/// of communities with the largest positive modularity gain.
///
/// Merging communities `i` and `j` joined by `c_ij` edges changes modularity
/// by `c_ij/m − D_i·D_j/(2m²)`; the search compares `2m·c_ij − D_i·D_j`.
pub fn greedy_baseline(graph: &Graph) -> Result<(f64, Partition)> {
    let n = graph.node_count();
    if graph.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let two_m = 2 * graph.edge_count() as i64;

    // between[i][j] for live communities; alive tracks merged-away rows.
    let mut between = vec![vec![0i64; n]; n];
    for &(u, v) in graph.edges() {
        between[u][v] += 1;
        between[v][u] += 1;
    }
    let mut degree: Vec<i64> = graph.degrees().into_iter().map(|d| d as i64).collect();
    let mut alive = vec![true; n];
    let mut owner: Vec<usize> = (0..n).collect();

    loop {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in (0..n).filter(|&i| alive[i]) {
            for j in (i + 1..n).filter(|&j| alive[j]) {
                if between[i][j] == 0 {
                    continue;
                }
                let gain = two_m * between[i][j] - degree[i] * degree[j];
                if gain > 0 && best.is_none_or(|(g, _, _)| gain > g) {
                    best = Some((gain, i, j));
                }
            }
        }
        let Some((_, i, j)) = best else { break };
        for k in 0..n {
            between[i][k] += between[j][k];
            between[k][i] = between[i][k];
            between[j][k] = 0;
            between[k][j] = 0;
        }
        between[i][i] = 0;
        degree[i] += degree[j];
        alive[j] = false;
        for o in owner.iter_mut().filter(|o| **o == j) {
            *o = i;
        }
    }
    let partition = Partition::new(owner).canonicalize();
    let q = modularity(graph, &partition)?;
    Ok((q, partition))
}
