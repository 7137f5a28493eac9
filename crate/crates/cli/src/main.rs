use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use netclust::{infer_format, load_graph, run_benchmark, InputFormat, ReportFormat, RunConfig};
use netclust_core::gso::GsoParams;
use netclust_core::oracle::brute_force_max_modularity;

#[derive(Parser)]
#[command(
    name = "netclust",
    version,
    about = "Modularity-based community detection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the group search optimizer on a graph.
    Run(RunArgs),
    /// Exhaustive modularity maximum of a small graph.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    input: PathBuf,
    /// Defaults to gml for `.gml` files, edgelist otherwise.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    #[arg(long, default_value_t = GsoParams::default().group_size)]
    group_size: usize,
    #[arg(long, default_value_t = GsoParams::default().iterations)]
    iterations: usize,
    #[arg(long, default_value_t = GsoParams::default().ranger_fraction)]
    ranger_fraction: f64,
    #[arg(long, default_value_t = GsoParams::default().patience)]
    patience: usize,
    #[arg(long, default_value_t = GsoParams::default().scan_count)]
    scan_count: usize,
    /// Three comma-separated per-node rates.
    #[arg(long, value_delimiter = ',', num_args = 3)]
    scan_rates: Option<Vec<f64>>,
    /// Scrounger copy probability.
    #[arg(long, default_value_t = GsoParams::default().scrounger_copy_prob)]
    beta: f64,
    #[arg(long, default_value_t = GsoParams::default().ranger_walk_rate)]
    ranger_rate: f64,
    #[arg(long, default_value_t = GsoParams::default().neighbor_move_prob)]
    neighbor_prob: f64,
    /// Label range; defaults to the node count.
    #[arg(long)]
    kmax: Option<usize>,
    /// Stop after this many bouts without improvement.
    #[arg(long)]
    stagnation: Option<usize>,
    /// Seed of the first repeat; required unless --explore is given.
    #[arg(long)]
    seed: Option<u64>,
    /// Pick a seed from the clock when none is given.
    #[arg(long)]
    explore: bool,
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    report_format: ReportFormat,
    #[arg(long)]
    dot: Option<PathBuf>,
}

impl RunArgs {
    fn config(self, seed: u64) -> RunConfig {
        let defaults = GsoParams::default();
        let scan_rates = match self.scan_rates {
            Some(r) => [r[0], r[1], r[2]],
            None => defaults.scan_rates,
        };
        let params = GsoParams {
            group_size: self.group_size,
            iterations: self.iterations,
            ranger_fraction: self.ranger_fraction,
            patience: self.patience,
            scan_count: self.scan_count,
            scan_rates,
            scrounger_copy_prob: self.beta,
            ranger_walk_rate: self.ranger_rate,
            neighbor_move_prob: self.neighbor_prob,
            kmax: self.kmax,
            seed,
            stagnation_limit: self.stagnation,
        };
        RunConfig {
            input: self.input,
            format: self.format,
            params,
            repeats: self.repeats,
            workers: self.workers,
            report: self.report,
            report_format: self.report_format,
            dot: self.dot,
        }
    }
}

fn run(args: RunArgs) -> Result<()> {
    let seed = match (args.seed, args.explore) {
        (Some(s), _) => s,
        (None, true) => {
            let s = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_nanos() as u64)
                .unwrap_or_default();
            println!("seed: {s}");
            s
        }
        (None, false) => bail!("a seed is required; pass --seed <s>, or --explore to pick one"),
    };
    let report = run_benchmark(&args.config(seed))?;
    println!(
        "{}: {} nodes, {} edges",
        report.dataset, report.nodes, report.edges
    );
    for r in &report.runs {
        println!(
            "seed {}: Q = {:.6}, {} communities, {:.0} ms",
            r.seed, r.best_q, r.communities, r.wall_time_ms
        );
    }
    let a = &report.aggregate;
    println!(
        "best Q = {:.6} (seed {}), mean = {:.6}, std = {:.6}",
        a.best_q, a.best_seed, a.mean_q, a.std_q
    );
    Ok(())
}

fn oracle(input: PathBuf, format: Option<InputFormat>) -> Result<()> {
    let format = format.unwrap_or_else(|| infer_format(&input));
    let graph = load_graph(&input, format)?;
    let (q, partition) = brute_force_max_modularity(&graph)?;
    println!("Q* = {q:.12}");
    for (i, community) in partition.communities().iter().enumerate() {
        let ids: Vec<String> = community
            .iter()
            .map(|&v| graph.original_id(v).to_string())
            .collect();
        println!("community {i}: {}", ids.join(" "));
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Oracle { input, format } => oracle(input, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
