//! Newman modularity of a partition.
//!
//! The modules matrix `e` is the K×K matrix whose entry `e[i][j]` is the
//! fraction of all edges joining community `i` to community `j`. An edge
//! inside community `i` adds `1/m` to `e[i][i]`; an edge between `i != j`
//! adds `1/(2m)` to both `e[i][j]` and `e[j][i]`, so `e` is symmetric and
//! sums to one. With `a[i]` the row sums,
//!
//! ```text
//! Q = Σ_i (e[i][i] - a[i]^2) = Tr(e) - ||e^2||
//! ```
//!
//! where `||x||` is the sum of all entries of `x`.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::partition::{canonical_labels, Partition};

#[derive(Debug, Clone, PartialEq)]
pub struct ModulesMatrix {
    k: usize,
    e: Vec<f64>,
    a: Vec<f64>,
}

impl ModulesMatrix {
    /// Number of nonempty communities.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.e[i * self.k + j]
    }

    /// Row `i` of the matrix.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.e[i * self.k..(i + 1) * self.k]
    }

    /// Row sums; `a[i]` is the fraction of edge ends attached to community `i`.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn trace(&self) -> f64 {
        (0..self.k).map(|i| self.get(i, i)).sum()
    }

    /// Sum of all entries.
    pub fn total(&self) -> f64 {
        self.e.iter().sum()
    }

    /// `||e^2||`: sum of all entries of the matrix product `e·e`.
    pub fn squared_sum(&self) -> f64 {
        let k = self.k;
        let mut total = 0.0;
        for i in 0..k {
            for j in 0..k {
                let mut cell = 0.0;
                for l in 0..k {
                    cell += self.get(i, l) * self.get(l, j);
                }
                total += cell;
            }
        }
        total
    }

    /// `Σ_i (e_ii - a_i^2)`.
    pub fn modularity(&self) -> f64 {
        (0..self.k)
            .map(|i| self.get(i, i) - self.a[i] * self.a[i])
            .sum()
    }

    /// `Tr(e) - ||e^2||`.
    pub fn modularity_trace_form(&self) -> f64 {
        self.trace() - self.squared_sum()
    }
}

fn check(graph: &Graph, partition: &Partition) -> Result<()> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if partition.len() != graph.node_count() {
        return Err(Error::LengthMismatch {
            expected: graph.node_count(),
            got: partition.len(),
        });
    }
    Ok(())
}

/// Builds the modules matrix. Rows are the nonempty communities in order of
/// their first member (the canonical labeling).
pub fn modules_matrix(graph: &Graph, partition: &Partition) -> Result<ModulesMatrix> {
    check(graph, partition)?;
    let (labels, k) = canonical_labels(partition.labels());
    // Integer tallies first: intra edges counted once on the diagonal, cross
    // edges once in each of the two symmetric cells.
    let mut tally = vec![0u64; k * k];
    for &(u, v) in graph.edges() {
        let (i, j) = (labels[u], labels[v]);
        if i == j {
            tally[i * k + i] += 2;
        } else {
            tally[i * k + j] += 1;
            tally[j * k + i] += 1;
        }
    }
    let two_m = 2.0 * graph.edge_count() as f64;
    let e: Vec<f64> = tally.iter().map(|&t| t as f64 / two_m).collect();
    let a = (0..k).map(|i| e[i * k..(i + 1) * k].iter().sum()).collect();
    Ok(ModulesMatrix { k, e, a })
}

/// Newman modularity `Q = Σ_i (e_ii - a_i^2)`.
pub fn modularity(graph: &Graph, partition: &Partition) -> Result<f64> {
    Ok(modules_matrix(graph, partition)?.modularity())
}

/// Modularity change from moving node `v` to `new_label`, without
/// rebuilding the modules matrix.
pub fn delta_modularity(
    graph: &Graph,
    partition: &Partition,
    v: NodeId,
    new_label: usize,
) -> Result<f64> {
    check(graph, partition)?;
    if v >= graph.node_count() {
        return Err(Error::NodeOutOfRange {
            node: v,
            n: graph.node_count(),
        });
    }
    let labels = partition.labels();
    let old = labels[v];
    if old == new_label {
        return Ok(0.0);
    }
    let mut degree_old = 0usize;
    let mut degree_new = 0usize;
    for (u, &l) in labels.iter().enumerate() {
        if l == old {
            degree_old += graph.neighbors(u).len();
        } else if l == new_label {
            degree_new += graph.neighbors(u).len();
        }
    }
    Ok(move_delta(
        graph, labels, v, new_label, degree_old, degree_new,
    ))
}

/// `ΔQ = (k_new - k_old)/m - d·(D_new - D_old + d)/(2m²)` where `k_*` count
/// edges from `v` into each community (excluding `v`), `D_*` are community
/// degree totals with `v` still in the old one, and `d` is `v`'s degree.
fn move_delta(
    graph: &Graph,
    labels: &[usize],
    v: NodeId,
    new_label: usize,
    degree_old: usize,
    degree_new: usize,
) -> f64 {
    let old = labels[v];
    let (mut k_old, mut k_new) = (0i64, 0i64);
    for &u in graph.neighbors(v) {
        if labels[u] == old {
            k_old += 1;
        } else if labels[u] == new_label {
            k_new += 1;
        }
    }
    let m = graph.edge_count() as f64;
    let d = graph.neighbors(v).len() as f64;
    (k_new - k_old) as f64 / m - d * (degree_new as f64 - degree_old as f64 + d) / (2.0 * m * m)
}

/// Keeps per-community degree totals so single-node moves cost `O(deg v)`.
#[derive(Debug, Clone)]
pub struct MoveTracker<'g> {
    graph: &'g Graph,
    labels: Vec<usize>,
    community_degree: Vec<usize>,
}

impl<'g> MoveTracker<'g> {
    /// `label_bound` must exceed every label that will ever be used.
    pub fn new(graph: &'g Graph, partition: &Partition, label_bound: usize) -> Result<Self> {
        check(graph, partition)?;
        let bound = label_bound.max(partition.labels().iter().map(|&l| l + 1).max().unwrap_or(0));
        let mut community_degree = vec![0; bound];
        for (v, &l) in partition.labels().iter().enumerate() {
            community_degree[l] += graph.neighbors(v).len();
        }
        Ok(Self {
            graph,
            labels: partition.labels().to_vec(),
            community_degree,
        })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn delta(&self, v: NodeId, new_label: usize) -> f64 {
        let old = self.labels[v];
        if old == new_label {
            return 0.0;
        }
        move_delta(
            self.graph,
            &self.labels,
            v,
            new_label,
            self.community_degree[old],
            self.community_degree[new_label],
        )
    }

    /// Applies the move and returns its modularity change.
    pub fn apply(&mut self, v: NodeId, new_label: usize) -> f64 {
        let delta = self.delta(v, new_label);
        let d = self.graph.neighbors(v).len();
        self.community_degree[self.labels[v]] -= d;
        self.community_degree[new_label] += d;
        self.labels[v] = new_label;
        delta
    }
}

/// Fast modularity evaluation for repeated use on one graph.
///
/// With `L_c` intra-community edges and degree total `D_c` per community,
/// `e_cc = L_c/m` and `a_c = D_c/(2m)`, so `4m²·Q = 4m·ΣL_c − ΣD_c²`. The
/// numerator is accumulated in integers and divided once, which makes the
/// result independent of label order: relabelings score bit-identically.
#[derive(Debug, Clone)]
pub struct Evaluator<'g> {
    graph: &'g Graph,
    degrees: Vec<i64>,
    scale: f64,
}

impl<'g> Evaluator<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if graph.edge_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let m = graph.edge_count() as f64;
        Ok(Self {
            graph,
            degrees: graph.degrees().into_iter().map(|d| d as i64).collect(),
            scale: 4.0 * m * m,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Modularity of a label vector of length `n`.
    pub fn evaluate(&self, labels: &[usize]) -> f64 {
        debug_assert_eq!(labels.len(), self.graph.node_count());
        let bound = labels.iter().copied().max().map_or(0, |l| l + 1);
        let mut degree = vec![0i64; bound];
        let mut intra = 0i64;
        for &(u, v) in self.graph.edges() {
            intra += i64::from(labels[u] == labels[v]);
        }
        for (v, &l) in labels.iter().enumerate() {
            degree[l] += self.degrees[v];
        }
        let m = self.graph.edge_count() as i64;
        let numerator = 4 * m * intra - degree.iter().map(|d| d * d).sum::<i64>();
        numerator as f64 / self.scale
    }
}
