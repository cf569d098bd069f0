use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use domlab::analytics::predicted_interval;
use domlab::graph::{read_edge_list, sample_gnp, write_edge_list};
use domlab::solver::domination_number_exact;
use domlab::{run_experiment, ExperimentConfig, Params};

const THREADS_ENV: &str = "DOMLAB_THREADS";

/// Domination numbers of random graphs: predictions, sampling, exact
/// solving and seeded experiments.
#[derive(Debug, Parser)]
#[command(name = "domlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Predict the two-point interval for D(G(n,p)).
    Predict {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Sample G(n,p) and emit it as an edge list.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the domination number of an edge-list graph exactly.
    Solve {
        /// Edge-list file, or `-` for standard input.
        #[arg(long)]
        input: PathBuf,
        /// Wall-clock budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// Only decide whether D(G) <= K.
        #[arg(long, value_name = "K")]
        cap: Option<usize>,
    },
    /// Run the experiment described by a JSON config and write its reports.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// Worker threads (default 1, or $DOMLAB_THREADS).
        #[arg(long)]
        threads: Option<usize>,
        /// Directory for the JSON and CSV report files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Document printed on standard output.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failures in how the tool was invoked rather than in the request itself.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn emit_json<T: serde::Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn open_input(path: &Path) -> anyhow::Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(io::stdin().lock()));
    }
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

fn thread_count(flag: Option<usize>) -> anyhow::Result<usize> {
    let threads = match flag {
        Some(t) => t,
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| UsageError(format!("{THREADS_ENV}={v:?} is not a thread count")))?,
            Err(_) => 1,
        },
    };
    if threads == 0 {
        return Err(UsageError("thread count must be at least 1".into()).into());
    }
    Ok(threads)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Predict { n, p } => emit_json(&predicted_interval(n, p)?),
        Command::Sample { n, p, seed, out } => {
            let g = sample_gnp(&Params::new(n, p)?, seed)?;
            match out {
                Some(path) => {
                    let file = File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
                    let mut w = BufWriter::new(file);
                    write_edge_list(&g, &mut w)?;
                    w.flush()?;
                }
                None => {
                    let mut w = BufWriter::new(io::stdout().lock());
                    write_edge_list(&g, &mut w)?;
                    w.flush()?;
                }
            }
            Ok(())
        }
        Command::Solve { input, budget, cap } => {
            if !(budget >= 0.0 && budget.is_finite()) {
                return Err(UsageError(format!("--budget must be a finite non-negative number, got {budget}")).into());
            }
            let g = read_edge_list(open_input(&input)?)?;
            emit_json(&domination_number_exact(&g, Duration::from_secs_f64(budget), cap))
        }
        Command::Experiment { config, threads, out_dir, format } => {
            let threads = thread_count(threads)?;
            let text = std::fs::read_to_string(&config).with_context(|| format!("cannot read {}", config.display()))?;
            let cfg: ExperimentConfig =
                serde_json::from_str(&text).with_context(|| format!("invalid config {}", config.display()))?;
            cfg.validate()?;
            if !out_dir.is_dir() {
                bail!("output directory {} does not exist", out_dir.display());
            }
            eprintln!("running {} experiment: n={} p={} trials={} threads={threads}", cfg.kind.as_str(), cfg.n, cfg.p, cfg.trials);
            let report = run_experiment(&cfg, threads)?;
            let stem = format!("{}-n{}-seed{}", cfg.kind.as_str(), cfg.n, cfg.master_seed);
            let json_path = out_dir.join(format!("{stem}.json"));
            let csv_path = out_dir.join(format!("{stem}.csv"));
            let json = report.to_json()?;
            std::fs::write(&json_path, format!("{json}\n"))
                .with_context(|| format!("cannot write {}", json_path.display()))?;
            let csv_file = File::create(&csv_path).with_context(|| format!("cannot create {}", csv_path.display()))?;
            report.write_csv(BufWriter::new(csv_file))?;
            eprintln!("wrote {} and {}", json_path.display(), csv_path.display());
            let mut out = io::stdout().lock();
            match format {
                Format::Json => writeln!(out, "{json}")?,
                Format::Csv => report.write_csv(&mut out)?,
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let line = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {line}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
