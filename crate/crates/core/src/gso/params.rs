use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Configuration of a group search run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GsoParams {
    /// Number of members in the group.
    pub group_size: usize,
    /// Number of searching bouts.
    pub iterations: usize,
    /// Share of the non-producers acting as rangers in each bout.
    pub ranger_fraction: f64,
    /// Failed producer scans tolerated before the producer returns to the
    /// position it held when the streak began.
    pub patience: usize,
    /// Candidates generated per scan rate in each producer scan.
    pub scan_count: usize,
    /// Per-node reassignment probabilities of the three producer scans.
    pub scan_rates: [f64; 3],
    /// Probability that a scrounger copies a given label from the producer.
    pub scrounger_copy_prob: f64,
    /// Per-node reassignment probability of a ranger walk.
    pub ranger_walk_rate: f64,
    /// Probability that a reassigned node adopts a neighbor's label rather
    /// than a uniformly drawn one.
    pub neighbor_move_prob: f64,
    /// Label range `[0, kmax)`; `None` means the node count.
    pub kmax: Option<usize>,
    pub seed: u64,
    /// Stop after this many bouts without a new best; `None` runs all bouts.
    pub stagnation_limit: Option<usize>,
}

impl Default for GsoParams {
    fn default() -> Self {
        Self {
            group_size: 60,
            iterations: 2000,
            ranger_fraction: 0.4,
            patience: 5,
            scan_count: 1,
            scan_rates: [0.02, 0.05, 0.10],
            scrounger_copy_prob: 0.3,
            ranger_walk_rate: 0.2,
            neighbor_move_prob: 0.9,
            kmax: None,
            seed: 0,
            stagnation_limit: None,
        }
    }
}

fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParam {
        name,
        reason: reason.into(),
    }
}

fn unit_open_closed(name: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(invalid(name, format!("{x} is not in (0, 1]")))
    }
}

impl GsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.group_size < 3 {
            return Err(invalid("group_size", "at least 3 members are required"));
        }
        if self.iterations < 1 {
            return Err(invalid("iterations", "must be at least 1"));
        }
        if !(0.0..1.0).contains(&self.ranger_fraction) {
            return Err(invalid(
                "ranger_fraction",
                format!("{} is not in [0, 1)", self.ranger_fraction),
            ));
        }
        if self.patience < 1 {
            return Err(invalid("patience", "must be at least 1"));
        }
        if self.scan_count < 1 {
            return Err(invalid("scan_count", "must be at least 1"));
        }
        for rate in self.scan_rates {
            unit_open_closed("scan_rates", rate)?;
        }
        unit_open_closed("scrounger_copy_prob", self.scrounger_copy_prob)?;
        unit_open_closed("ranger_walk_rate", self.ranger_walk_rate)?;
        if !(0.0..=1.0).contains(&self.neighbor_move_prob) {
            return Err(invalid(
                "neighbor_move_prob",
                format!("{} is not in [0, 1]", self.neighbor_move_prob),
            ));
        }
        if self.kmax == Some(0) {
            return Err(invalid("kmax", "must be at least 1"));
        }
        if self.stagnation_limit == Some(0) {
            return Err(invalid("stagnation_limit", "must be at least 1"));
        }
        Ok(())
    }

    /// Label range for a graph with `n` nodes.
    pub fn label_bound(&self, n: usize) -> usize {
        self.kmax.unwrap_or(n)
    }

    /// Rangers per bout: `round(ranger_fraction · (m − 1))`.
    pub fn ranger_count(&self) -> usize {
        let others = self.group_size.saturating_sub(1);
        ((self.ranger_fraction * others as f64).round() as usize).min(others)
    }

    pub fn scrounger_count(&self) -> usize {
        self.group_size.saturating_sub(1) - self.ranger_count()
    }

    /// Fitness evaluations performed by `bouts` searching bouts plus the
    /// initial population.
    pub fn evaluations_for(&self, bouts: usize) -> u64 {
        let per_bout = 3 * self.scan_count + self.group_size - 1;
        self.group_size as u64 + (bouts * per_bout) as u64
    }
}
