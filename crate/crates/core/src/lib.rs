//! Community detection by modularity maximization with a discrete group
//! search optimizer.
//!
//! ```
//! use netclust_core::{graph::parse_edge_list, gso::{optimize, GsoParams}};
//!
//! let graph = parse_edge_list("0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n").unwrap();
//! let params = GsoParams { group_size: 20, iterations: 100, seed: 7, ..Default::default() };
//! let run = optimize(&graph, &params).unwrap();
//! assert!((run.best_q - 5.0 / 14.0).abs() < 1e-12);
//! ```

pub mod error;
pub mod graph;
pub mod gso;
pub mod modularity;
pub mod oracle;
pub mod partition;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
pub use modularity::{delta_modularity, modularity, modules_matrix, ModulesMatrix};
pub use partition::Partition;
