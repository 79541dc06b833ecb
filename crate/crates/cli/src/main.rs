use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use kmodes_core::analysis::{
    first_principal_component, fitness_with, summarize_component, ComponentSummary, FITNESS_K,
};
use kmodes_core::engine::DEFAULT_MAX_ITERATIONS;
use kmodes_core::harness::output::{self, write_cost_curve, write_json, write_run_outputs};
use kmodes_core::harness::{load_dataset, run_experiment, Experiment, IngestOptions, Ingested, LabelColumn};
use kmodes_core::init::InitKind;
use kmodes_core::selection::{build_cost_curve, k_bounds, knee, KneeResult};
use kmodes_core::{Dataset, Error};

const EXIT_FAILURE: u8 = 1;
const EXIT_INGEST: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kmodes",
    version,
    about = "k-modes clustering experiments on categorical data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Repeated k-modes runs for one or all initialisers.
    Run(RunArgs),
    /// Cost-versus-k curve and its knee.
    Knee(KneeArgs),
    /// Cao-versus-matching fitness and a summary of the first principal component.
    Fitness(FitnessArgs),
}

#[derive(Args)]
struct DataArgs {
    /// Delimited file of categorical records.
    #[arg(long)]
    data: PathBuf,
    /// Class label column: a header name, a zero-based index, or `last`.
    #[arg(long = "label-col")]
    label_col: Option<LabelColumn>,
    #[arg(long = "missing-token", default_value = "?")]
    missing_token: String,
    /// The file has no header row.
    #[arg(long = "no-header")]
    no_header: bool,
    #[arg(long, default_value_t = ',')]
    delimiter: char,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    data: DataArgs,
    /// random, huang, cao, matching or all.
    #[arg(long)]
    init: InitChoice,
    /// A number, `classes` or `knee`.
    #[arg(long)]
    k: KChoice,
    #[arg(long)]
    reps: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITERATIONS)]
    max_iter: usize,
}

#[derive(Args)]
struct KneeArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Largest k on the curve; defaults to floor(sqrt(N)).
    #[arg(long = "k-max")]
    k_max: Option<usize>,
    #[arg(long)]
    out: PathBuf,
    /// Initialiser behind the curve.
    #[arg(long, default_value = "cao")]
    init: InitKind,
    /// Runs per k for seeded initialisers; the cheapest is kept.
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITERATIONS)]
    max_iter: usize,
}

#[derive(Args)]
struct FitnessArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long, default_value_t = 25)]
    reps: usize,
    #[arg(long)]
    seed: u64,
    /// Directory for fitness.json and component_summary.csv.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITERATIONS)]
    max_iter: usize,
}

#[derive(Clone, Copy)]
enum InitChoice {
    All,
    One(InitKind),
}

impl FromStr for InitChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.eq_ignore_ascii_case("all") {
            Ok(InitChoice::All)
        } else {
            s.parse().map(InitChoice::One)
        }
    }
}

#[derive(Clone, Copy)]
enum KChoice {
    Fixed(usize),
    Classes,
    Knee,
}

impl FromStr for KChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "classes" => Ok(KChoice::Classes),
            "knee" => Ok(KChoice::Knee),
            _ => s
                .parse()
                .map(KChoice::Fixed)
                .map_err(|_| format!("expected a positive integer, `classes` or `knee`, got {s:?}")),
        }
    }
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    error: Error,
}

impl Failure {
    fn config(error: Error) -> Self {
        Self {
            code: EXIT_CONFIG,
            error,
        }
    }

    fn output(error: Error) -> Self {
        Self {
            code: EXIT_FAILURE,
            error,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_CONFIG)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Knee(args) => run_knee(args),
        Command::Fitness(args) => run_fitness(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn ingest(args: &DataArgs) -> Result<Ingested, Failure> {
    let delimiter = u8::try_from(args.delimiter)
        .map_err(|_| Failure::config(Error::Config("the delimiter must be a single-byte character".into())))?;
    let options = IngestOptions {
        missing_token: args.missing_token.clone(),
        label_column: args.label_col.clone(),
        has_header: !args.no_header,
        delimiter,
    };
    load_dataset(&args.data, &options).map_err(|error| Failure {
        code: EXIT_INGEST,
        error,
    })
}

fn dataset_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "data".into())
}

fn run(args: RunArgs) -> Result<(), Failure> {
    if args.reps == 0 {
        return Err(Failure::config(Error::Config("--reps must be at least 1".into())));
    }
    let ingested = ingest(&args.data)?;
    let ds = &ingested.dataset;
    fs::create_dir_all(&args.out).map_err(|e| Failure::output(e.into()))?;

    let k = match args.k {
        KChoice::Fixed(k) => k,
        KChoice::Classes => ingested
            .report
            .adjusted_classes
            .ok_or_else(|| Failure::config(Error::Config("--k classes needs --label-col".into())))?,
        KChoice::Knee => {
            let range = k_bounds(ds.n_rows()).map_err(Failure::config)?;
            knee_for(ds, range, InitKind::Cao, 1, args.seed, args.max_iter, &args.out)?.k
        }
    };

    let kinds: Vec<InitKind> = match args.init {
        InitChoice::All => InitKind::ALL.to_vec(),
        InitChoice::One(kind) => vec![kind],
    };
    let mut exp = Experiment::new(dataset_label(&args.data.data), k, args.reps, args.seed);
    exp.max_iterations = args.max_iter;
    let mut records = Vec::with_capacity(kinds.len() * args.reps);
    for kind in kinds {
        log::info!("running {kind} with k = {k}");
        records.extend(run_experiment(ds, kind, &exp).map_err(Failure::config)?);
    }
    write_run_outputs(&args.out, &records, &ingested.report).map_err(Failure::output)?;
    println!("k = {k}; {} records written to {}", records.len(), args.out.display());
    Ok(())
}

/// Builds the curve, writes it with the chosen knee into `out`, and returns
/// the knee.
fn knee_for(
    ds: &Dataset,
    range: std::ops::RangeInclusive<usize>,
    kind: InitKind,
    reps: usize,
    seed: u64,
    max_iter: usize,
    out: &Path,
) -> Result<KneeResult, Failure> {
    let curve = build_cost_curve(ds, range.clone(), kind, reps, seed, max_iter).map_err(Failure::config)?;
    let result = knee(&curve);
    write_cost_curve(&out.join(output::COST_CURVE_FILE), &curve).map_err(Failure::output)?;
    let summary = serde_json::json!({
        "k": result.k,
        "warning": result.warning,
        "k_min": range.start(),
        "k_max": range.end(),
        "init": kind,
    });
    write_json(&out.join(output::KNEE_FILE), &summary).map_err(Failure::output)?;
    Ok(result)
}

fn run_knee(args: KneeArgs) -> Result<(), Failure> {
    let ingested = ingest(&args.data)?;
    let ds = &ingested.dataset;
    let range = match args.k_max {
        Some(k_max) => 2..=k_max,
        None => k_bounds(ds.n_rows()).map_err(Failure::config)?,
    };
    if range.end() > &ds.n_rows() || range.end() < &3 {
        return Err(Failure::config(Error::Config(format!(
            "--k-max must lie in [3, {}]",
            ds.n_rows()
        ))));
    }
    fs::create_dir_all(&args.out).map_err(|e| Failure::output(e.into()))?;
    write_json(&args.out.join(output::INGEST_FILE), &ingested.report).map_err(Failure::output)?;
    let result = knee_for(ds, range, args.init, args.reps, args.seed, args.max_iter, &args.out)?;
    match result.warning {
        Some(w) => println!("k = {} ({w})", result.k),
        None => println!("k = {}", result.k),
    }
    Ok(())
}

fn run_fitness(args: FitnessArgs) -> Result<(), Failure> {
    let ingested = ingest(&args.data)?;
    let ds = &ingested.dataset;
    let report = fitness_with(ds, FITNESS_K, args.reps, args.seed, args.max_iter).map_err(Failure::config)?;
    let pc = first_principal_component(ds).map_err(Failure::config)?;
    let summary = summarize_component(&pc.scores).map_err(Failure::config)?;

    fs::create_dir_all(&args.out).map_err(|e| Failure::output(e.into()))?;
    write_json(&args.out.join("fitness.json"), &report).map_err(Failure::output)?;
    write_component_summary(
        &args.out.join("component_summary.csv"),
        &dataset_label(&args.data.data),
        &summary,
    )
    .map_err(|e| Failure::output(e.into()))?;
    println!(
        "{}",
        serde_json::to_string(&report).map_err(|e| Failure::output(e.into()))?
    );
    Ok(())
}

fn write_component_summary(path: &Path, label: &str, s: &ComponentSummary) -> std::io::Result<()> {
    let mut text = format!("dataset,{}\n{label}", ComponentSummary::HEADER.join(","));
    for v in s.values() {
        text.push_str(&format!(",{v}"));
    }
    text.push('\n');
    fs::write(path, text)
}
