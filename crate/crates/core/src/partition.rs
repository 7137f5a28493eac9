use serde::{Deserialize, Serialize};

/// Community assignment for every node: `labels()[v]` is the community of
/// node `v`. Labels are arbitrary integers; two partitions that differ only
/// by a relabeling describe the same clustering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    pub fn new(labels: Vec<usize>) -> Self {
        Self { labels }
    }

    /// Every node in community 0.
    pub fn single(n: usize) -> Self {
        Self { labels: vec![0; n] }
    }

    /// Every node in its own community.
    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (0..n).collect(),
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn labels_mut(&mut self) -> &mut [usize] {
        &mut self.labels
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Restricted-growth relabeling: communities are numbered 0, 1, 2, ...
    /// in order of their first member.
    pub fn canonicalize(&self) -> Partition {
        let (labels, _) = canonical_labels(&self.labels);
        Partition { labels }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0;
        for &l in &self.labels {
            if l > next {
                return false;
            }
            if l == next {
                next += 1;
            }
        }
        true
    }

    /// Number of distinct labels in use.
    pub fn community_count(&self) -> usize {
        canonical_labels(&self.labels).1
    }

    /// Members of each community in canonical order.
    pub fn communities(&self) -> Vec<Vec<usize>> {
        let (labels, k) = canonical_labels(&self.labels);
        let mut out = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            out[l].push(v);
        }
        out
    }
}

impl From<Vec<usize>> for Partition {
    fn from(labels: Vec<usize>) -> Self {
        Self::new(labels)
    }
}

/// Returns the restricted-growth relabeling and the number of communities.
pub(crate) fn canonical_labels(labels: &[usize]) -> (Vec<usize>, usize) {
    let bound = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut map = vec![usize::MAX; bound];
    let mut next = 0;
    let out = labels
        .iter()
        .map(|&l| {
            if map[l] == usize::MAX {
                map[l] = next;
                next += 1;
            }
            map[l]
        })
        .collect();
    (out, next)
}
