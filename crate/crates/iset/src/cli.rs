//! Command-line front end.
//!
//! Exit codes: 0 success, 1 internal error, 2 parse error, 3 budget
//! exhausted, 4 degenerate input, 5 a verification reported a violation.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use iset_core::aks::{run_aks, AksError, AksParams};
use iset_core::bounds::{bounds_from_profile, sandwich_from_profile, BoundFormulas};
use iset_core::count::{BigCount, Budget, CountError, IndependenceNumber, SizeProfile, DEFAULT_BUDGET};
use iset_core::ensemble::{EnsembleError, LemmaReport};
use iset_core::Graph;

use crate::edgelist;
use crate::genspec::GeneratorSpec;
use crate::parallel::Workers;
use crate::report::{graph_stats, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "iset", version, about = "Independent-set counting experiments")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for component counting and Monte-Carlo trials.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
    /// Count independent sets exactly.
    Count(CountArgs),
    /// Run the sparse-sampling independent set algorithm.
    Aks(AksArgs),
    /// Monte-Carlo check of the sampling lemma's six statistical claims.
    VerifyLemma(LemmaArgs),
    /// Evaluate every closed-form bound and the exact sandwich.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args)]
pub struct Source {
    /// Edge-list file.
    #[arg(long, conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    /// Generator spec, e.g. `tfp:n=100` or `bipartite:l=1000,r=1000,p=0.01`.
    #[arg(long = "gen")]
    pub gen: Option<String>,
    /// Seed for the generator and for every randomized step.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BudgetArg {
    /// Recursion-node budget for exact counting.
    #[arg(long, env = "ISET_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub spec: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list destination; the edge list goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub budget: BudgetArg,
    /// Also report the size profile (independence polynomial coefficients).
    #[arg(long)]
    pub profile: bool,
}

#[derive(Debug, Args)]
pub struct AksArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub k: Option<usize>,
    /// Round count R.
    #[arg(long)]
    pub rounds: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub c10: f64,
    #[arg(long)]
    pub nu_floor: Option<f64>,
    #[arg(long, default_value_t = 64)]
    pub max_attempts: usize,
    /// Treat unmet hypotheses as errors.
    #[arg(long)]
    pub strict: bool,
    /// Repeat the run this many times and count distinct outcomes.
    #[arg(long)]
    pub runs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
    /// Tolerance in standard errors.
    #[arg(long, default_value_t = 4.0)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c10: f64,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub budget: BudgetArg,
    /// Skip exact counting.
    #[arg(long)]
    pub no_exact: bool,
    /// Formula-only mode: evaluate at `N,T` without a graph.
    #[arg(long, value_name = "N,T")]
    pub formula: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Degenerate(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Degenerate(_) => EXIT_DEGENERATE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
            CountError::TooLarge { .. } => CliError::Degenerate(e.to_string()),
        }
    }
}

impl From<AksError> for CliError {
    fn from(e: AksError) -> Self {
        match e {
            AksError::InvalidParams(_) => CliError::Parse(e.to_string()),
            _ => CliError::Degenerate(e.to_string()),
        }
    }
}

impl From<EnsembleError> for CliError {
    fn from(e: EnsembleError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

/// What a command produced: the report (if any), raw stdout data, and the exit code.
pub struct Outcome {
    pub report: Option<Report>,
    pub stdout: Option<String>,
    pub exit_code: i32,
}

impl Outcome {
    fn report(report: Report, exit_code: i32) -> Self {
        Self { report: Some(report), stdout: None, exit_code }
    }
}

struct Loaded {
    graph: Graph,
    source: Value,
    warnings: Vec<String>,
}

fn load(source: &Source) -> Result<Loaded, CliError> {
    match (&source.input, &source.gen) {
        (Some(path), None) => {
            let parsed = edgelist::read(path).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(Loaded {
                graph: parsed.graph,
                source: json!({ "file": path.display().to_string() }),
                warnings: parsed.warnings,
            })
        }
        (None, Some(text)) => {
            let spec: GeneratorSpec = text.parse().map_err(|e: crate::genspec::SpecError| CliError::Parse(e.to_string()))?;
            let graph = spec.build(source.seed).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(Loaded { graph, source: json!({ "generator": spec.to_string() }), warnings: Vec::new() })
        }
        _ => Err(CliError::Parse("exactly one of --input or --gen is required".into())),
    }
}

fn with_graph(mut report: Report, loaded: Loaded) -> Report {
    report.graph_stats = Some(graph_stats(&loaded.graph));
    report.warnings.extend(loaded.warnings);
    report
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let workers = Workers::new(cli.workers);
    let started = Instant::now();
    let mut outcome = match &cli.command {
        Command::Gen(args) => cmd_gen(args)?,
        Command::Count(args) => cmd_count(args, &workers)?,
        Command::Aks(args) => cmd_aks(args, &workers)?,
        Command::VerifyLemma(args) => cmd_verify_lemma(args, &workers)?,
        Command::Bounds(args) => cmd_bounds(args, &workers)?,
    };
    if let Some(report) = &mut outcome.report {
        report.wall_clock_ms = started.elapsed().as_secs_f64() * 1e3;
        report.workers = workers.count();
    }
    Ok(outcome)
}

pub fn cmd_gen(args: &GenArgs) -> Result<Outcome, CliError> {
    let spec: GeneratorSpec = args.spec.parse().map_err(|e: crate::genspec::SpecError| CliError::Parse(e.to_string()))?;
    let graph = spec.build(args.seed).map_err(|e| CliError::Parse(e.to_string()))?;
    let text = edgelist::write(&graph);
    let config = json!({
        "command": "gen",
        "generator": spec.to_string(),
        "seed": args.seed,
        "out": args.out.as_ref().map(|p| p.display().to_string()),
    });
    let mut report = Report::new(config, json!({ "written": args.out.is_some() }));
    report.graph_stats = Some(graph_stats(&graph));
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::report(report, EXIT_OK))
        }
        None => Ok(Outcome { report: Some(report), stdout: Some(text), exit_code: EXIT_OK }),
    }
}

pub fn cmd_count(args: &CountArgs, workers: &Workers) -> Result<Outcome, CliError> {
    let loaded = load(&args.source)?;
    let g = &loaded.graph;
    let budget = Budget::new(args.budget.budget);
    let mut result = serde_json::Map::new();
    if args.profile {
        let profile: SizeProfile = workers.tally(g, &budget)?;
        let count = profile.total();
        result.insert("count".into(), json!(count.to_decimal()));
        result.insert("log2".into(), json!(count.log2()));
        result.insert("alpha".into(), json!(profile.independence_number()));
        result.insert("profile".into(), serde_json::to_value(&profile).expect("profile serializes"));
    } else {
        let count: BigCount = workers.tally(g, &budget)?;
        let alpha: IndependenceNumber = workers.tally(g, &Budget::new(args.budget.budget))?;
        result.insert("count".into(), json!(count.to_decimal()));
        result.insert("log2".into(), json!(count.log2()));
        result.insert("alpha".into(), json!(alpha.0));
    }
    result.insert("nodes".into(), json!(budget.used()));
    let config = json!({
        "command": "count",
        "source": loaded.source,
        "seed": args.source.seed,
        "budget": args.budget.budget,
        "profile": args.profile,
    });
    Ok(Outcome::report(with_graph(Report::new(config, Value::Object(result)), loaded), EXIT_OK))
}

pub fn cmd_aks(args: &AksArgs, workers: &Workers) -> Result<Outcome, CliError> {
    let loaded = load(&args.source)?;
    let g = &loaded.graph;
    let params = AksParams {
        k: args.k,
        rounds: args.rounds,
        c10: args.c10,
        nu_floor: args.nu_floor,
        max_attempts: args.max_attempts,
        seed: args.source.seed,
        strict_hypotheses: args.strict,
        ..AksParams::default()
    };
    let config = json!({
        "command": "aks",
        "source": loaded.source,
        "seed": args.source.seed,
        "params": params,
        "runs": args.runs,
    });
    if let Some(runs) = args.runs {
        let distinct = workers.distinct_sets(g, &params, runs, args.source.seed)?;
        let report = Report::new(config, serde_json::to_value(distinct).expect("serializes"));
        return Ok(Outcome::report(with_graph(report, loaded), EXIT_OK));
    }
    let out = run_aks(g, &params)?;
    let verified = g.is_independent(&out.independent_set);
    let result = json!({
        "path": out.path,
        "fallback_reason": out.fallback_reason,
        "size": out.independent_set.len(),
        "independent_set": out.independent_set,
        "verified_independent": verified,
        "completed_iterations": out.completed_iterations,
        "resolved": out.params,
    });
    let mut report = Report::new(config, result);
    report.trace = Some(serde_json::to_value(&out.trace).expect("trace serializes"));
    let code = if verified { EXIT_OK } else { EXIT_INTERNAL };
    Ok(Outcome::report(with_graph(report, loaded), code))
}

pub fn cmd_verify_lemma(args: &LemmaArgs, workers: &Workers) -> Result<Outcome, CliError> {
    let loaded = load(&args.source)?;
    let g = &loaded.graph;
    let samples = workers.lemma_samples(g, args.k, args.trials, args.source.seed)?;
    let lemma = LemmaReport::evaluate(g, args.k, &samples, args.sigma, args.c10);
    let config = json!({
        "command": "verify-lemma",
        "source": loaded.source,
        "seed": args.source.seed,
        "k": args.k,
        "trials": args.trials,
        "sigma": args.sigma,
        "c10": args.c10,
    });
    let result = json!({
        "n": lemma.n,
        "t": lemma.t,
        "k": lemma.k,
        "pool_size": lemma.pool_size,
        "triangle_free": lemma.triangle_free,
        "stats": lemma.stats,
        "whole_graph_expected_sample_edges": lemma.whole_graph_expected_edges,
        "any_violated": lemma.any_violated(),
    });
    let mut report = Report::new(config, result);
    report.verdicts = Some(serde_json::to_value(&lemma.claims).expect("claims serialize"));
    let code = if lemma.any_violated() { EXIT_VIOLATION } else { EXIT_OK };
    Ok(Outcome::report(with_graph(report, loaded), code))
}

fn parse_formula(text: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Parse(format!("--formula expects `N,T`, got `{text}`"));
    let (n, t) = text.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, t.trim().parse().map_err(|_| bad())?))
}

pub fn cmd_bounds(args: &BoundsArgs, workers: &Workers) -> Result<Outcome, CliError> {
    if let Some(text) = &args.formula {
        let (n, t) = parse_formula(text)?;
        let config = json!({ "command": "bounds", "formula": { "n": n, "t": t } });
        let result = serde_json::to_value(BoundFormulas::evaluate(n, t)).expect("serializes");
        return Ok(Outcome::report(Report::new(config, result), EXIT_OK));
    }
    let loaded = load(&args.source)?;
    let g = &loaded.graph;
    let config = json!({
        "command": "bounds",
        "source": loaded.source,
        "seed": args.source.seed,
        "budget": args.budget.budget,
        "exact": !args.no_exact,
    });
    let (profile, exhausted) = if args.no_exact {
        (None, false)
    } else {
        match workers.tally::<SizeProfile>(g, &Budget::new(args.budget.budget)) {
            Ok(p) => (Some(p), false),
            Err(CountError::BudgetExhausted { .. }) => (None, true),
            Err(e) => return Err(e.into()),
        }
    };
    let bounds = bounds_from_profile(g, profile.as_ref(), exhausted);
    let mut report = Report::new(config, serde_json::to_value(&bounds).expect("serializes"));
    let mut code = if exhausted { EXIT_BUDGET } else { EXIT_OK };
    if let Some(p) = &profile {
        let sandwich = sandwich_from_profile(g, p);
        if !sandwich.all_hold() {
            code = EXIT_VIOLATION;
        }
        report.verdicts = Some(serde_json::to_value(&sandwich.checks).expect("serializes"));
    }
    Ok(Outcome::report(with_graph(report, loaded), code))
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let data_on_stdout = outcome.stdout.is_some();
            if let Some(data) = outcome.stdout {
                print!("{data}");
            }
            if let Some(report) = outcome.report {
                let text = report.render(cli.json);
                match &cli.report {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, text) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return EXIT_INTERNAL;
                        }
                    }
                    // stdout already carries the edge list
                    None if data_on_stdout => eprint!("{text}"),
                    None => print!("{text}"),
                }
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
