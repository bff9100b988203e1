//! `no3l` — command-line front end for the no-three-in-line toolkit.
//!
//! Subcommands map one-to-one onto the library: `census` (exact collinear
//! triple counts), `solve` (maximum-set search), `verify` (independent
//! witness checking), `estimate`/`constants` (the heuristic chain), and
//! `mc` (Monte Carlo trials). Reports go to standard output as JSON, with
//! an embedded run manifest so every result is replayable; diagnostics go
//! to standard error. Exit status: 0 on success, 1 on domain errors (bad
//! sizes, refused caps, invalid witnesses), 2 on usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use chrono::{SecondsFormat, Utc};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use no3l_core::census;
use no3l_core::grid::{find_collinear_triple, GridSize, PointSet};
use no3l_core::heuristic;
use no3l_core::montecarlo::{self, GapOutcome, TrialSummary};
use no3l_core::rng;
use no3l_core::solver::{self, SolverConfig};

#[derive(Parser)]
#[command(
    name = "no3l",
    version,
    about = "No-three-in-line toolkit: exact censuses, exhaustive search, heuristic estimates, Monte Carlo stress tests"
)]
struct Cli {
    /// Worker threads for the census, solver, and Monte Carlo kernels.
    #[arg(long, global = true, env = "NO3L_THREADS", default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact count of collinear triples in the n×n grid
    Census(CensusArgs),
    /// Backtracking search for a maximum no-three-in-line set
    Solve(SolveArgs),
    /// Independently check a witness file
    Verify(VerifyArgs),
    /// Evaluate the heuristic estimate chain at (n, k)
    Estimate(EstimateArgs),
    /// The two conjectured density constants, to 12 decimal places
    Constants,
    /// Monte Carlo trials
    #[command(subcommand)]
    Mc(McCommand),
}

#[derive(Args)]
struct CensusArgs {
    /// Grid side length
    #[arg(long)]
    n: u32,
    /// Use the brute-force all-triples oracle instead of the fast kernel
    #[arg(long)]
    brute: bool,
    /// Cap for the brute-force oracle
    #[arg(long, default_value_t = census::DEFAULT_BRUTE_CAP)]
    brute_cap: u32,
    /// Also report the (3/π²)·n⁴·ln n main term and the ratio against it
    #[arg(long)]
    compare: bool,
}

#[derive(Args)]
struct SolveArgs {
    /// Grid side length
    #[arg(long)]
    n: u32,
    /// "2n" (chase the pigeonhole bound), "max" (prove optimality), or an
    /// explicit target size
    #[arg(long, default_value = "2n")]
    target: String,
    /// Wall-clock budget in seconds; defaults to 60 when chasing a target,
    /// unlimited when proving optimality
    #[arg(long)]
    time_budget: Option<f64>,
    /// Abort after this many search nodes
    #[arg(long)]
    node_budget: Option<u64>,
    /// Explore all first-column choices instead of canonical ones
    #[arg(long)]
    no_symmetry_breaking: bool,
    /// Write the witness to this file in the point-set text format
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Witness file: `n <side>` header, then one `x y` point per line
    file: PathBuf,
}

#[derive(Args)]
struct EstimateArgs {
    /// Grid side length
    #[arg(long)]
    n: u32,
    /// Density parameter: subsets have round(k·n) points
    #[arg(long)]
    k: f64,
    /// Constant C of the ±C·n slack bracket
    #[arg(long, default_value_t = heuristic::DEFAULT_SLACK_CONSTANT)]
    slack_c: f64,
    /// Accepted for compatibility; JSON is already the default output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum McCommand {
    /// Survival rate of uniform random round(k·n)-point subsets
    Survival(McSurvivalArgs),
    /// Collinearity rate of uniform random distinct triples
    Triples(McTriplesArgs),
}

#[derive(Args)]
struct McSurvivalArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    samples: u64,
    #[arg(long)]
    seed: u64,
    /// Sweep k over a range: k=LO:HI:STEP (inclusive endpoints)
    #[arg(long, value_name = "k=LO:HI:STEP")]
    sweep: Option<String>,
    /// Emit CSV rows instead of JSON (manifest goes to standard error)
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct McTriplesArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    samples: u64,
    #[arg(long)]
    seed: u64,
}

/// Reproducibility provenance embedded in every JSON report.
#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    parameters: BTreeMap<&'static str, String>,
    seed: Option<u64>,
    tool_version: &'static str,
    started: String,
    finished: String,
}

struct ManifestBuilder {
    subcommand: &'static str,
    parameters: BTreeMap<&'static str, String>,
    seed: Option<u64>,
    started: String,
}

impl ManifestBuilder {
    fn new(subcommand: &'static str) -> Self {
        ManifestBuilder {
            subcommand,
            parameters: BTreeMap::new(),
            seed: None,
            started: timestamp(),
        }
    }

    fn param(mut self, key: &'static str, value: impl ToString) -> Self {
        self.parameters.insert(key, value.to_string());
        self
    }

    fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn finish(self) -> RunManifest {
        RunManifest {
            subcommand: self.subcommand,
            parameters: self.parameters,
            seed: self.seed,
            tool_version: env!("CARGO_PKG_VERSION"),
            started: self.started,
            finished: timestamp(),
        }
    }
}

fn timestamp() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    manifest: RunManifest,
    #[serde(flatten)]
    payload: T,
}

fn emit<T: Serialize>(manifest: ManifestBuilder, payload: T) -> Result<()> {
    let report = Report {
        manifest: manifest.finish(),
        payload,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Census(args) => run_census(args, threads),
        Command::Solve(args) => run_solve(args, threads),
        Command::Verify(args) => run_verify(args),
        Command::Estimate(args) => run_estimate(args),
        Command::Constants => run_constants(),
        Command::Mc(McCommand::Survival(args)) => run_mc_survival(args, threads),
        Command::Mc(McCommand::Triples(args)) => run_mc_triples(args, threads),
    }
}

#[derive(Serialize)]
struct CensusPayload {
    n: u32,
    /// Decimal string: the count outgrows 64-bit JSON consumers.
    t: String,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    main_term: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<f64>,
}

fn run_census(args: CensusArgs, threads: usize) -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("census")
        .param("n", args.n)
        .param("brute", args.brute)
        .param("brute_cap", args.brute_cap)
        .param("compare", args.compare)
        .param("threads", threads);
    let n = GridSize::new(args.n)?;
    let (count, method) = if args.brute {
        (
            census::count_triples_brute_with_cap(n, args.brute_cap)?,
            "brute",
        )
    } else {
        (census::count_triples_fast_threaded(n, threads)?, "fast")
    };
    let (main_term, ratio) = if args.compare {
        if n.get() < 2 {
            bail!("--compare needs n >= 2");
        }
        let main = census::asymptotic_main_term(n);
        (Some(main), Some(count.value() as f64 / main))
    } else {
        (None, None)
    };
    emit(
        manifest,
        CensusPayload {
            n: args.n,
            t: count.value().to_string(),
            method,
            main_term,
            ratio,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SolvePayload {
    n: u32,
    best_size: u32,
    witness: Vec<(u32, u32)>,
    proven_optimal: bool,
    nodes_explored: u64,
    elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_file: Option<String>,
}

fn run_solve(args: SolveArgs, threads: usize) -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("solve")
        .param("n", args.n)
        .param("target", &args.target)
        .param(
            "time_budget",
            args.time_budget
                .map_or_else(|| "none".into(), |s| s.to_string()),
        )
        .param(
            "node_budget",
            args.node_budget
                .map_or_else(|| "none".into(), |b| b.to_string()),
        )
        .param("symmetry_breaking", !args.no_symmetry_breaking)
        .param("threads", threads);
    let n = GridSize::new(args.n)?;

    let (target_size, prove_optimal) = match args.target.as_str() {
        "2n" => (Some(2 * args.n), false),
        "max" => (None, true),
        explicit => {
            let size: u32 = explicit
                .parse()
                .map_err(|_| anyhow!("--target must be \"2n\", \"max\", or a size"))?;
            (Some(size), false)
        }
    };
    let time_budget = match args.time_budget {
        Some(secs) => Some(Duration::from_secs_f64(secs)),
        None if prove_optimal => None,
        None => Some(solver::DEFAULT_TIME_BUDGET),
    };
    let cfg = SolverConfig {
        node_budget: args.node_budget,
        time_budget,
        target_size,
        prove_optimal,
        symmetry_breaking: !args.no_symmetry_breaking,
        thread_count: threads,
    };
    let result = solver::solve(n, &cfg)?;

    let witness_file = match &args.out {
        Some(path) => {
            std::fs::write(path, result.witness.to_witness_string())
                .with_context(|| format!("writing witness to {}", path.display()))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    emit(
        manifest,
        SolvePayload {
            n: args.n,
            best_size: result.best_size,
            witness: result.witness.points().iter().map(|p| (p.x, p.y)).collect(),
            proven_optimal: result.proven_optimal,
            nodes_explored: result.nodes_explored,
            elapsed_ms: result.elapsed.as_millis() as u64,
            witness_file,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyPayload {
    file: String,
    n: u32,
    size: usize,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_violation: Option<[(u32, u32); 3]>,
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("verify").param("file", args.file.display());
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let set = PointSet::parse_witness(&text)
        .map_err(|e| anyhow!("{}: {e}", args.file.display()))?;
    let violation = find_collinear_triple(&set);
    let valid = violation.is_none();
    emit(
        manifest,
        VerifyPayload {
            file: args.file.display().to_string(),
            n: set.size().get(),
            size: set.len(),
            valid,
            first_violation: violation.map(|[a, b, c]| [(a.x, a.y), (b.x, b.y), (c.x, c.y)]),
        },
    )?;
    if valid {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("witness contains three collinear points");
        Ok(ExitCode::from(1))
    }
}

#[derive(Serialize)]
struct EstimatePayload {
    n: u32,
    k: f64,
    p_triple_exact: f64,
    p_triple_asym: f64,
    survival_log: f64,
    survival_slack_log: f64,
    count_log10: f64,
    count_log10_slack: f64,
    exponent_corrected: f64,
    exponent_erroneous: f64,
}

fn run_estimate(args: EstimateArgs) -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("estimate")
        .param("n", args.n)
        .param("k", args.k)
        .param("slack_c", args.slack_c);
    let n = GridSize::new(args.n)?;
    let report = heuristic::estimate_report(n, args.k, args.slack_c)?;
    emit(
        manifest,
        EstimatePayload {
            n: args.n,
            k: report.k,
            p_triple_exact: report.p_triple_exact,
            p_triple_asym: report.p_triple_asym,
            survival_log: report.survival_log,
            survival_slack_log: report.survival_slack_log,
            count_log10: report.count_log10,
            count_log10_slack: report.count_log10_slack,
            exponent_corrected: report.exponent_corrected,
            exponent_erroneous: report.exponent_erroneous,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ConstantsPayload {
    k_corrected: f64,
    k_original: f64,
    k_corrected_12dp: String,
    k_original_12dp: String,
}

fn run_constants() -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("constants");
    let constants = heuristic::conjecture_constants();
    emit(
        manifest,
        ConstantsPayload {
            k_corrected: constants.k_corrected,
            k_original: constants.k_original,
            k_corrected_12dp: format!("{:.12}", constants.k_corrected),
            k_original_12dp: format!("{:.12}", constants.k_original),
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SurvivalRow {
    n: u32,
    k: f64,
    subset_size: u32,
    samples: u64,
    survivors: u64,
    p_hat: f64,
    stderr: f64,
    predicted_log: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap_stderr: Option<f64>,
    all_samples_died: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap_upper_bound: Option<f64>,
    seed: u64,
    workers: usize,
    rng: &'static str,
}

impl SurvivalRow {
    fn from_gap(summary: TrialSummary, outcome: GapOutcome) -> Self {
        let (gap, gap_stderr, all_died, upper) = match outcome {
            GapOutcome::Measured { gap, stderr } => (Some(gap), Some(stderr), false, None),
            GapOutcome::AllSamplesDied { gap_upper_bound } => {
                (None, None, true, Some(gap_upper_bound))
            }
        };
        SurvivalRow {
            n: summary.n.get(),
            k: summary.k,
            subset_size: summary.subset_size,
            samples: summary.samples,
            survivors: summary.survivors,
            p_hat: summary.p_hat,
            stderr: summary.stderr,
            predicted_log: summary.predicted_log,
            gap,
            gap_stderr,
            all_samples_died: all_died,
            gap_upper_bound: upper,
            seed: summary.seed,
            workers: summary.workers,
            rng: rng::ALGORITHM,
        }
    }

    const CSV_HEADER: &'static str = "n,k,subset_size,samples,survivors,p_hat,stderr,\
predicted_log,gap,gap_stderr,all_samples_died,gap_upper_bound,seed,workers,rng";

    fn csv_line(&self) -> String {
        fn opt(v: Option<f64>) -> String {
            v.map_or_else(String::new, |x| x.to_string())
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.subset_size,
            self.samples,
            self.survivors,
            self.p_hat,
            self.stderr,
            self.predicted_log,
            opt(self.gap),
            opt(self.gap_stderr),
            self.all_samples_died,
            opt(self.gap_upper_bound),
            self.seed,
            self.workers,
            self.rng
        )
    }
}

#[derive(Serialize)]
struct SweepPayload {
    rows: Vec<SurvivalRow>,
}

fn run_mc_survival(args: McSurvivalArgs, threads: usize) -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("mc survival")
        .param("n", args.n)
        .param("k", args.k.map_or_else(|| "none".into(), |k| k.to_string()))
        .param("samples", args.samples)
        .param("sweep", args.sweep.as_deref().unwrap_or("none").to_string())
        .param("csv", args.csv)
        .param("threads", threads)
        .seed(args.seed);
    let n = GridSize::new(args.n)?;

    let ks: Vec<f64> = match (&args.sweep, args.k) {
        (Some(spec), _) => parse_sweep(spec)?,
        (None, Some(k)) => vec![k],
        (None, None) => bail!("provide --k or --sweep"),
    };

    // Every sweep row reuses the same base seed; rows differ through k, and
    // any row is replayable standalone with a plain --k run.
    let mut rows = Vec::with_capacity(ks.len());
    for k in ks {
        let gap = montecarlo::independence_gap_threaded(n, k, args.samples, args.seed, threads)?;
        rows.push(SurvivalRow::from_gap(gap.summary, gap.outcome));
    }

    if args.csv {
        // Keep stdout machine-readable CSV; provenance goes to stderr.
        eprintln!(
            "{}",
            serde_json::to_string(&manifest.finish()).expect("manifest serializes")
        );
        println!("{}", SurvivalRow::CSV_HEADER);
        for row in &rows {
            println!("{}", row.csv_line());
        }
    } else if args.sweep.is_some() {
        emit(manifest, SweepPayload { rows })?;
    } else {
        let row = rows.into_iter().next().expect("one k, one row");
        emit(manifest, row)?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TriplesPayload {
    n: u32,
    subset_size: u32,
    samples: u64,
    collinear_hits: u64,
    p_hat: f64,
    stderr: f64,
    predicted_log: f64,
    seed: u64,
    workers: usize,
    rng: &'static str,
}

fn run_mc_triples(args: McTriplesArgs, threads: usize) -> Result<ExitCode> {
    let manifest = ManifestBuilder::new("mc triples")
        .param("n", args.n)
        .param("samples", args.samples)
        .param("threads", threads)
        .seed(args.seed);
    let n = GridSize::new(args.n)?;
    let summary =
        montecarlo::sample_triple_collinearity_threaded(n, args.samples, args.seed, threads)?;
    emit(
        manifest,
        TriplesPayload {
            n: summary.n.get(),
            subset_size: summary.subset_size,
            samples: summary.samples,
            collinear_hits: summary.survivors,
            p_hat: summary.p_hat,
            stderr: summary.stderr,
            predicted_log: summary.predicted_log,
            seed: summary.seed,
            workers: summary.workers,
            rng: rng::ALGORITHM,
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

/// Parses `k=LO:HI:STEP` into the inclusive sweep grid.
fn parse_sweep(spec: &str) -> Result<Vec<f64>> {
    let body = spec
        .strip_prefix("k=")
        .ok_or_else(|| anyhow!("sweep must look like k=LO:HI:STEP"))?;
    let parts: Vec<&str> = body.split(':').collect();
    if parts.len() != 3 {
        bail!("sweep must look like k=LO:HI:STEP");
    }
    let lo: f64 = parts[0].parse().context("sweep LO")?;
    let hi: f64 = parts[1].parse().context("sweep HI")?;
    let step: f64 = parts[2].parse().context("sweep STEP")?;
    if step <= 0.0 || hi < lo {
        bail!("sweep needs STEP > 0 and HI >= LO");
    }
    let mut ks = Vec::new();
    let mut i = 0u32;
    loop {
        let k = lo + f64::from(i) * step;
        if k > hi + 1e-9 {
            break;
        }
        ks.push(k);
        i += 1;
    }
    Ok(ks)
}
