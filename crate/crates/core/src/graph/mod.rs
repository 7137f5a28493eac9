//! Immutable undirected simple graphs with a dense node numbering.
//!
//! Nodes are always `0..n`; the identifier each node carried in its source
//! file is kept in [`Graph::original_id`] so results can be reported in the
//! dataset's own terms.

mod edgelist;
mod gml;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use gml::parse_gml;

use std::collections::HashSet;

use crate::error::{Error, Position, Result};

/// Dense node index in `0..n`.
pub type NodeId = usize;

/// Non-fatal observations made while loading a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadWarnings {
    /// Edge entries that repeated an already seen node pair.
    pub duplicate_edges: usize,
    /// Edge entries carrying a weight/value attribute that was dropped.
    pub ignored_weights: usize,
}

impl LoadWarnings {
    pub fn is_empty(&self) -> bool {
        self.duplicate_edges == 0 && self.ignored_weights == 0
    }

    /// Human-readable lines, one per non-zero counter.
    pub fn messages(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.duplicate_edges > 0 {
            out.push(format!(
                "{} duplicate edge(s) collapsed",
                self.duplicate_edges
            ));
        }
        if self.ignored_weights > 0 {
            out.push(format!(
                "{} edge weight(s) ignored; graph treated as unweighted",
                self.ignored_weights
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
    adjacency: Vec<Vec<NodeId>>,
    original_ids: Vec<i64>,
    warnings: LoadWarnings,
}

impl Graph {
    /// Builds a graph over nodes `0..n` whose original ids are the indices
    /// themselves. Duplicate pairs are collapsed and counted; self-loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let ids = (0..n as i64).collect();
        let mut builder = GraphBuilder::new(ids);
        for &(u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            builder.add_edge(u, v, Position { line: 0, column: 0 })?;
        }
        builder.finish()
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(Error::NodeOutOfRange { node: v, n: self.n })
    }

    /// All degrees, indexed by node.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Identifier the node had in the source file.
    pub fn original_id(&self, v: NodeId) -> i64 {
        self.original_ids[v]
    }

    pub fn original_ids(&self) -> &[i64] {
        &self.original_ids
    }

    /// Dense index of a node given its original identifier.
    pub fn node_by_original_id(&self, id: i64) -> Option<NodeId> {
        self.original_ids.iter().position(|&x| x == id)
    }

    pub fn warnings(&self) -> &LoadWarnings {
        &self.warnings
    }
}

/// Accumulates nodes and edges while a parser walks its input.
pub(crate) struct GraphBuilder {
    original_ids: Vec<i64>,
    adjacency: Vec<Vec<NodeId>>,
    edges: Vec<(NodeId, NodeId)>,
    seen: HashSet<(NodeId, NodeId)>,
    pub(crate) warnings: LoadWarnings,
}

impl GraphBuilder {
    pub(crate) fn new(original_ids: Vec<i64>) -> Self {
        let n = original_ids.len();
        Self {
            original_ids,
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
            seen: HashSet::new(),
            warnings: LoadWarnings::default(),
        }
    }

    pub(crate) fn add_edge(&mut self, u: NodeId, v: NodeId, pos: Position) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop {
                id: self.original_ids[u],
                pos,
            });
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            self.warnings.duplicate_edges += 1;
            return Ok(());
        }
        self.edges.push(key);
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<Graph> {
        if self.original_ids.is_empty() {
            return Err(Error::NoNodes);
        }
        Ok(Graph {
            n: self.original_ids.len(),
            edges: self.edges,
            adjacency: self.adjacency,
            original_ids: self.original_ids,
            warnings: self.warnings,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn degree_on_path() {
        let g = path3();
        assert_eq!(g.degree(1).unwrap(), 2);
        assert_eq!(g.degree(0).unwrap(), 1);
        assert_eq!(g.degree(2).unwrap(), 1);
    }

    #[test]
    fn degree_out_of_range() {
        let g = path3();
        assert_eq!(g.degree(3), Err(Error::NodeOutOfRange { node: 3, n: 3 }));
    }

    #[test]
    fn from_edges_normalizes_and_collapses() {
        let g = Graph::from_edges(3, &[(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.warnings().duplicate_edges, 1);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn from_edges_rejects_self_loop() {
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::SelfLoop { id: 1, .. })
        ));
    }

    #[test]
    fn zero_nodes_rejected() {
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::NoNodes));
    }
}
