use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::time::Instant;

use log::{info, warn};
use netclust_core::graph::{parse_edge_list, parse_gml};
use netclust_core::gso::{optimize, optimize_with_workers, GsoParams};
use netclust_core::{Graph, Partition};

use crate::dot::export_dot;
use crate::error::HarnessError;
use crate::manifest;
use crate::report::{write_report, Aggregate, InputFormat, Report, ReportFormat, RunRecord};

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    /// `None` infers the format from the file extension.
    pub format: Option<InputFormat>,
    /// `params.seed` is the seed of the first repeat.
    pub params: GsoParams,
    pub repeats: usize,
    /// Worker threads per run; `None` uses the global pool.
    pub workers: Option<usize>,
    pub report: Option<PathBuf>,
    pub report_format: ReportFormat,
    /// Renders the best partition over all repeats.
    pub dot: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, params: GsoParams) -> Self {
        Self {
            input: input.into(),
            format: None,
            params,
            repeats: 1,
            workers: None,
            report: None,
            report_format: ReportFormat::Json,
            dot: None,
        }
    }
}

/// `.gml` files are GML, everything else an edge list.
pub fn infer_format(path: &Path) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("gml") => InputFormat::Gml,
        _ => InputFormat::Edgelist,
    }
}

pub fn load_graph(path: &Path, format: InputFormat) -> Result<Graph, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed = match format {
        InputFormat::Gml => parse_gml(&text),
        InputFormat::Edgelist => parse_edge_list(&text),
    };
    parsed.map_err(|source| HarnessError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// File stem of the input, used as the dataset name.
pub fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Loads the graph, runs the optimizer `repeats` times with consecutive
/// seeds and writes the requested outputs.
pub fn run_benchmark(config: &RunConfig) -> Result<Report, HarnessError> {
    if config.repeats == 0 {
        return Err(netclust_core::Error::InvalidParam {
            name: "repeats",
            reason: "must be at least 1".into(),
        }
        .into());
    }
    config.params.validate()?;
    let format = config.format.unwrap_or_else(|| infer_format(&config.input));
    let graph = load_graph(&config.input, format)?;
    let dataset = dataset_name(&config.input);

    let mut warnings = graph.warnings().messages();
    warnings.extend(manifest::mismatch(
        &dataset,
        graph.node_count(),
        graph.edge_count(),
    ));
    for w in &warnings {
        warn!("{w}");
    }

    let mut runs = Vec::with_capacity(config.repeats);
    for i in 0..config.repeats as u64 {
        let params = GsoParams {
            seed: config.params.seed.wrapping_add(i),
            ..config.params.clone()
        };
        let start = Instant::now();
        let result = match config.workers {
            Some(w) => optimize_with_workers(&graph, &params, w)?,
            None => optimize(&graph, &params)?,
        };
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        info!(
            "{dataset} seed {}: Q = {:.6} with {} communities",
            params.seed,
            result.best_q,
            result.best_partition.community_count()
        );
        runs.push(RunRecord {
            seed: params.seed,
            best_q: result.best_q,
            communities: result.best_partition.community_count(),
            iterations: result.iterations_run,
            evaluations: result.evaluations,
            wall_time_ms,
            trace: result.trace,
            partition: result.best_partition.into_labels(),
        });
    }

    let aggregate = Aggregate::over(&runs);
    let report = Report {
        dataset,
        input: config.input.display().to_string(),
        format,
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        expected: manifest::expected(&dataset_name(&config.input)),
        warnings,
        params: config.params.clone(),
        repeats: config.repeats,
        runs,
        aggregate,
    };

    if let Some(path) = &config.report {
        let file = create(path)?;
        write_report(&report, config.report_format, BufWriter::new(file))?;
    }
    if let Some(path) = &config.dot {
        let best = report
            .runs
            .iter()
            .find(|r| r.seed == report.aggregate.best_seed)
            .expect("best run present");
        let dot = export_dot(&graph, &Partition::new(best.partition.clone()));
        fs::write(path, dot).map_err(|source| HarnessError::Write {
            path: path.clone(),
            source,
        })?;
    }
    Ok(report)
}

fn create(path: &Path) -> Result<File, HarnessError> {
    File::create(path).map_err(|source| HarnessError::Write {
        path: path.to_path_buf(),
        source,
    })
}
