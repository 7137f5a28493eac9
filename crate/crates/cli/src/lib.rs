//! Benchmark harness for `netclust-core`: dataset loading, seeded repeats,
//! reports and DOT export.

pub mod dot;
pub mod error;
pub mod harness;
pub mod manifest;
pub mod report;

pub use dot::export_dot;
pub use error::HarnessError;
pub use harness::{dataset_name, infer_format, load_graph, run_benchmark, RunConfig};
pub use report::{
    read_csv_rows, read_json_report, write_report, Aggregate, CsvRow, InputFormat, Report,
    ReportFormat, RunRecord, CSV_COLUMNS,
};
