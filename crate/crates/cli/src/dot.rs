//! Graphviz export of a partitioned graph.

use std::fmt::Write;

use netclust_core::{Graph, Partition};

/// Size of the `set312` Brewer color scheme.
const PALETTE: usize = 12;

/// Renders `graph` as an undirected DOT graph colored by community.
///
/// Every node is labelled with its original id and carries a `community`
/// attribute holding its canonical community label. The fill color cycles
/// through the twelve-color `set312` scheme.
pub fn export_dot(graph: &Graph, partition: &Partition) -> String {
    let canonical = partition.canonicalize();
    let mut out = String::new();
    out.push_str("graph communities {\n");
    out.push_str("  node [style=filled, colorscheme=set312];\n");
    for v in 0..graph.node_count() {
        let c = canonical.label(v);
        writeln!(
            out,
            "  n{v} [label=\"{}\", community={c}, fillcolor={}];",
            graph.original_id(v),
            c % PALETTE + 1
        )
        .unwrap();
    }
    for &(u, v) in graph.edges() {
        writeln!(out, "  n{u} -- n{v};").unwrap();
    }
    out.push_str("}\n");
    out
}
