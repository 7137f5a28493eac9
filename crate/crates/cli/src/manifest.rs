//! Published node and edge counts for the benchmark datasets.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub nodes: usize,
    pub edges: usize,
}

const MANIFEST: [(&str, Expected); 5] = [
    (
        "karate",
        Expected {
            nodes: 34,
            edges: 78,
        },
    ),
    (
        "dolphins",
        Expected {
            nodes: 62,
            edges: 159,
        },
    ),
    (
        "jazz",
        Expected {
            nodes: 196,
            edges: 2742,
        },
    ),
    (
        "football",
        Expected {
            nodes: 115,
            edges: 615,
        },
    ),
    (
        "lesmis",
        Expected {
            nodes: 77,
            edges: 254,
        },
    ),
];

/// Looks up a dataset by name, ignoring case and `-`/`_`.
pub fn expected(dataset: &str) -> Option<Expected> {
    let key: String = dataset
        .chars()
        .filter(|c| !matches!(c, '-' | '_'))
        .collect::<String>()
        .to_ascii_lowercase();
    MANIFEST
        .iter()
        .find(|(name, _)| *name == key)
        .map(|&(_, e)| e)
}

/// Warning text when the loaded counts differ from the manifest.
pub fn mismatch(dataset: &str, nodes: usize, edges: usize) -> Option<String> {
    let e = expected(dataset)?;
    (e.nodes != nodes || e.edges != edges).then(|| {
        format!(
            "{dataset}: loaded {nodes} nodes and {edges} edges, expected {} nodes and {} edges",
            e.nodes, e.edges
        )
    })
}
