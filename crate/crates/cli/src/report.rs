//! Benchmark reports and their JSON and CSV encodings.
//!
//! The JSON form is a single [`Report`] object. The CSV form has one row per
//! run followed by one aggregate row; its columns are [`CSV_COLUMNS`].

use std::io::{Read, Write};

use netclust_core::gso::GsoParams;
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::manifest::Expected;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    Gml,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    pub best_q: f64,
    /// Number of communities in the best partition.
    pub communities: usize,
    pub iterations: usize,
    pub evaluations: u64,
    pub wall_time_ms: f64,
    pub trace: Vec<f64>,
    /// Canonical labels of the best partition, in internal node order.
    pub partition: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub best_q: f64,
    /// Seed of the first run reaching `best_q`.
    pub best_seed: u64,
    pub mean_q: f64,
    /// Population standard deviation over runs.
    pub std_q: f64,
}

impl Aggregate {
    /// Panics on an empty slice.
    pub fn over(runs: &[RunRecord]) -> Self {
        let mut best = &runs[0];
        for r in &runs[1..] {
            if r.best_q > best.best_q {
                best = r;
            }
        }
        let n = runs.len() as f64;
        let mean_q = runs.iter().map(|r| r.best_q).sum::<f64>() / n;
        let var = runs
            .iter()
            .map(|r| (r.best_q - mean_q).powi(2))
            .sum::<f64>()
            / n;
        Self {
            best_q: best.best_q,
            best_seed: best.seed,
            mean_q,
            std_q: var.sqrt(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub dataset: String,
    pub input: String,
    pub format: InputFormat,
    pub nodes: usize,
    pub edges: usize,
    pub expected: Option<Expected>,
    pub warnings: Vec<String>,
    /// Parameters of the first run; run `i` used `params.seed + i`.
    pub params: GsoParams,
    pub repeats: usize,
    pub runs: Vec<RunRecord>,
    pub aggregate: Aggregate,
}

pub const CSV_COLUMNS: [&str; 27] = [
    "row",
    "dataset",
    "input",
    "format",
    "nodes",
    "edges",
    "seed",
    "best_q",
    "communities",
    "iterations_run",
    "evaluations",
    "wall_time_ms",
    "mean_q",
    "std_q",
    "group_size",
    "iterations",
    "ranger_fraction",
    "patience",
    "scan_count",
    "scan_rate_1",
    "scan_rate_2",
    "scan_rate_3",
    "scrounger_copy_prob",
    "ranger_walk_rate",
    "neighbor_move_prob",
    "kmax",
    "stagnation_limit",
];

/// One CSV line. `row` is `run` or `aggregate`; the aggregate row carries
/// the best seed and leaves per-run fields empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub row: String,
    pub dataset: String,
    pub input: String,
    pub format: InputFormat,
    pub nodes: usize,
    pub edges: usize,
    pub seed: u64,
    pub best_q: f64,
    pub communities: Option<usize>,
    pub iterations_run: Option<usize>,
    pub evaluations: Option<u64>,
    pub wall_time_ms: Option<f64>,
    pub mean_q: Option<f64>,
    pub std_q: Option<f64>,
    pub group_size: usize,
    pub iterations: usize,
    pub ranger_fraction: f64,
    pub patience: usize,
    pub scan_count: usize,
    pub scan_rate_1: f64,
    pub scan_rate_2: f64,
    pub scan_rate_3: f64,
    pub scrounger_copy_prob: f64,
    pub ranger_walk_rate: f64,
    pub neighbor_move_prob: f64,
    pub kmax: Option<usize>,
    pub stagnation_limit: Option<usize>,
}

impl CsvRow {
    fn new(report: &Report, row: &str, seed: u64, best_q: f64) -> Self {
        let p = &report.params;
        Self {
            row: row.to_string(),
            dataset: report.dataset.clone(),
            input: report.input.clone(),
            format: report.format,
            nodes: report.nodes,
            edges: report.edges,
            seed,
            best_q,
            communities: None,
            iterations_run: None,
            evaluations: None,
            wall_time_ms: None,
            mean_q: None,
            std_q: None,
            group_size: p.group_size,
            iterations: p.iterations,
            ranger_fraction: p.ranger_fraction,
            patience: p.patience,
            scan_count: p.scan_count,
            scan_rate_1: p.scan_rates[0],
            scan_rate_2: p.scan_rates[1],
            scan_rate_3: p.scan_rates[2],
            scrounger_copy_prob: p.scrounger_copy_prob,
            ranger_walk_rate: p.ranger_walk_rate,
            neighbor_move_prob: p.neighbor_move_prob,
            kmax: p.kmax,
            stagnation_limit: p.stagnation_limit,
        }
    }

    /// Parameters that reproduce this row's run.
    pub fn params(&self) -> GsoParams {
        GsoParams {
            group_size: self.group_size,
            iterations: self.iterations,
            ranger_fraction: self.ranger_fraction,
            patience: self.patience,
            scan_count: self.scan_count,
            scan_rates: [self.scan_rate_1, self.scan_rate_2, self.scan_rate_3],
            scrounger_copy_prob: self.scrounger_copy_prob,
            ranger_walk_rate: self.ranger_walk_rate,
            neighbor_move_prob: self.neighbor_move_prob,
            kmax: self.kmax,
            seed: self.seed,
            stagnation_limit: self.stagnation_limit,
        }
    }
}

impl Report {
    pub fn csv_rows(&self) -> Vec<CsvRow> {
        let mut rows: Vec<CsvRow> = self
            .runs
            .iter()
            .map(|r| CsvRow {
                communities: Some(r.communities),
                iterations_run: Some(r.iterations),
                evaluations: Some(r.evaluations),
                wall_time_ms: Some(r.wall_time_ms),
                ..CsvRow::new(self, "run", r.seed, r.best_q)
            })
            .collect();
        rows.push(CsvRow {
            mean_q: Some(self.aggregate.mean_q),
            std_q: Some(self.aggregate.std_q),
            ..CsvRow::new(
                self,
                "aggregate",
                self.aggregate.best_seed,
                self.aggregate.best_q,
            )
        });
        rows
    }
}

pub fn write_report<W: Write>(
    report: &Report,
    format: ReportFormat,
    mut out: W,
) -> Result<(), HarnessError> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in report.csv_rows() {
                w.serialize(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn read_json_report<R: Read>(input: R) -> Result<Report, HarnessError> {
    Ok(serde_json::from_reader(input)?)
}

pub fn read_csv_rows<R: Read>(input: R) -> Result<Vec<CsvRow>, HarnessError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|row| row.map_err(HarnessError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(seed: u64, best_q: f64) -> RunRecord {
        RunRecord {
            seed,
            best_q,
            communities: 2,
            iterations: 10,
            evaluations: 100,
            wall_time_ms: 1.5,
            trace: vec![best_q],
            partition: vec![0, 0, 1],
        }
    }

    #[test]
    fn aggregate_statistics() {
        let runs = [record(7, 0.1), record(8, 0.3), record(9, 0.3)];
        let a = Aggregate::over(&runs);
        assert_eq!(a.best_q, 0.3);
        assert_eq!(a.best_seed, 8);
        assert!((a.mean_q - 0.7 / 3.0).abs() < 1e-15);
        assert!((a.std_q - (0.08f64 / 9.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn csv_header_matches_columns() {
        let runs = vec![record(1, 0.25)];
        let report = Report {
            dataset: "x".into(),
            input: "x.edgelist".into(),
            format: InputFormat::Edgelist,
            nodes: 3,
            edges: 2,
            expected: None,
            warnings: vec![],
            params: GsoParams::default(),
            repeats: 1,
            aggregate: Aggregate::over(&runs),
            runs,
        };
        let mut buf = Vec::new();
        write_report(&report, ReportFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_COLUMNS.join(","));
    }
}
