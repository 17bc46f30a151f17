//! Command-line front end. All file and terminal I/O lives here.

use clap::{Args, Parser, Subcommand, ValueEnum};
use gonal_core::fiberclass::{self, LevelTableRow};
use gonal_core::invariants::{self, InvariantTuple};
use gonal_core::nodecurve::{self, ConstructOptions, CurveFile};
use gonal_core::strata::{self, StratumRecord};
use gonal_core::Error;
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;

pub const ENVELOPE_SCHEMA: &str = "1";
pub const DEFAULT_P: u64 = 10007;
pub const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "gonal", version, about = "Strata, invariants and explicit curves for 4-gonal curves")]
pub struct Cli {
    /// Master seed; every random choice is derived from it.
    #[arg(long, global = true, env = "GONAL_SEED")]
    pub seed: Option<u64>,
    /// Worker threads for independent trials and tuples.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stratification table of M_{g,4} by invariants.
    Table(TableArgs),
    /// Admissibility of an invariant tuple.
    Check(CheckArgs),
    /// Build and certify an explicit curve over F_p.
    Construct(ConstructArgs),
    /// Re-certify a curve file.
    Verify(VerifyArgs),
    /// Rank of the node-condition matrix over many random plans.
    RankExperiment(RankArgs),
    /// Degenerate fibre classification.
    Fibers(FibersArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
pub struct TableArgs {
    pub g: i64,
    /// Also list the strata on F_t for this t >= 1.
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Serialize)]
pub struct CheckArgs {
    pub g: i64,
    pub lambda: i64,
    /// Required when t = 0.
    pub a: Option<i64>,
    pub b: Option<i64>,
    #[arg(long, default_value_t = 0)]
    pub t: i64,
}

#[derive(Args, Debug, Serialize)]
pub struct ConstructArgs {
    pub g: i64,
    pub lambda: i64,
    pub a: i64,
    pub b: i64,
    #[arg(long, default_value_t = DEFAULT_P)]
    pub p: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// Samples per node plan.
    #[arg(long, default_value_t = 32)]
    pub max_retries: usize,
    #[arg(long, default_value_t = 8)]
    pub max_plans: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    pub file: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct RankArgs {
    pub g: i64,
    pub lambda: i64,
    pub a: Option<i64>,
    pub b: Option<i64>,
    #[arg(long, default_value_t = 0)]
    pub t: i64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_P)]
    pub p: u64,
}

#[derive(Args, Debug, Serialize)]
#[group(required = true, multiple = false)]
pub struct FibersArgs {
    /// All fibre types and patterns up to this level.
    #[arg(long)]
    pub level: Option<u32>,
    /// Comma-separated blow-up centers: f (on the fibre, first only),
    /// s (strict transform), e (last exceptional line), i (intersection point).
    #[arg(long)]
    pub script: Option<String>,
}

/// What a command produced: exit code plus the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Classification(_) => 1,
        Error::Usage(_) | Error::Range(_) | Error::Domain(_) | Error::Format(_) => 2,
        Error::Resample(_) | Error::ConstructionFailed { .. } => 3,
    }
}

fn fail(e: Error) -> Outcome {
    Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn envelope(command: &str, inputs: &impl Serialize, results: Value, seed: Option<u64>, p: Option<u64>) -> String {
    let v = json!({
        "schema_version": ENVELOPE_SCHEMA,
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": {
            "seed": seed,
            "p": p,
            "tool_version": env!("CARGO_PKG_VERSION"),
        },
    });
    let mut s = serde_json::to_string_pretty(&v).expect("plain data");
    s.push('\n');
    s
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("plain data")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.jobs {
        Some(0) => fail(Error::Usage("--jobs must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => fail(Error::Usage(e.to_string())),
        },
        None => dispatch(&cli),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Check(a) => cmd_check(a),
        Command::Construct(a) => cmd_construct(a, seed),
        Command::Verify(a) => cmd_verify(a),
        Command::RankExperiment(a) => cmd_rank_experiment(a, seed),
        Command::Fibers(a) => cmd_fibers(a),
    }
}

pub const CSV_HEADER: &str = "lambda,a,b,c,delta,eps,tau,xi,dim_W,dim_fiber,dim_M,generic";

fn csv_row(r: &StratumRecord) -> String {
    let opt = |f: fn(&InvariantTuple) -> i64| r.tuple.as_ref().map(|t| f(t).to_string()).unwrap_or_default();
    let delta = r.tuple.as_ref().map_or_else(|| invariants::delta(r.g, r.lambda, r.t), |t| t.delta);
    [
        r.lambda.to_string(),
        opt(|t| t.a),
        opt(|t| t.b),
        opt(|t| t.c),
        delta.to_string(),
        opt(|t| t.eps as i64),
        opt(|t| t.tau as i64),
        opt(|t| t.xi as i64),
        r.dim_w.to_string(),
        r.dim_fiber_theta.to_string(),
        r.dim_m.to_string(),
        r.is_generic_stratum.to_string(),
    ]
    .join(",")
}

fn cmd_table(a: &TableArgs) -> Outcome {
    let mut rows = match strata::stratification_table(a.g) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if let Some(t) = a.t {
        match strata::stratification_table_t(a.g, t) {
            Ok(r) => rows.extend(r),
            Err(e) => return fail(e),
        }
    }
    match a.format {
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in &rows {
                s.push_str(&csv_row(r));
                s.push('\n');
            }
            Outcome::ok(s)
        }
        Format::Json => Outcome::ok(envelope("table", a, to_value(&rows), None, None)),
    }
}

fn cmd_check(a: &CheckArgs) -> Outcome {
    let tup = if a.t == 0 {
        match (a.a, a.b) {
            (Some(x), Some(y)) => invariants::check_admissible_t0(a.g, a.lambda, x, y),
            _ => Err(Error::Usage("check at t = 0 needs both a and b".into())),
        }
    } else {
        invariants::check_admissible_tpos(a.g, a.lambda, a.t)
    };
    let tup = match tup {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let reasons: Vec<String> = tup.reasons.iter().map(|r| r.to_string()).collect();
    let results = json!({ "admissible": tup.admissible, "reasons": reasons, "tuple": tup });
    let stdout = envelope("check", a, results, None, None);
    if tup.admissible {
        Outcome::ok(stdout)
    } else {
        Outcome { code: 1, stdout, stderr: format!("not admissible: {}\n", reasons.join("; ")) }
    }
}

fn cmd_construct(a: &ConstructArgs, seed: u64) -> Outcome {
    let opts = ConstructOptions { max_retries: a.max_retries, max_plans: a.max_plans, ..Default::default() };
    let curve = match nodecurve::construct(a.g, a.lambda, a.a, a.b, a.p, seed, opts) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let file = CurveFile::from_curve(&curve);
    if let Err(e) = std::fs::write(&a.out, file.to_json()) {
        return Outcome { code: 2, stdout: String::new(), stderr: format!("error: writing {}: {e}\n", a.out.display()) };
    }
    let results = json!({
        "out": a.out,
        "delta": curve.plan.delta(),
        "genus": curve.genus,
        "recovered": curve.recovered.scroll,
        "irreducibility": curve.irreducibility.tag,
        "attempts": curve.attempts,
    });
    Outcome::ok(envelope("construct", a, results, Some(seed), Some(a.p)))
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let text = match std::fs::read_to_string(&a.file) {
        Ok(t) => t,
        Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: reading {}: {e}\n", a.file.display()) },
    };
    let report = match CurveFile::from_json(&text).and_then(|f| Ok((nodecurve::verify_curve_file(&f)?, f))) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let (report, file) = report;
    let stdout = envelope("verify", a, to_value(&report), Some(file.seed), Some(file.p));
    if report.pass {
        Outcome::ok(stdout)
    } else {
        let failed = report.failed().join(", ");
        Outcome { code: 1, stdout, stderr: format!("certificate failed: {failed}\n") }
    }
}

fn cmd_rank_experiment(a: &RankArgs, seed: u64) -> Outcome {
    let res = if a.t == 0 {
        match (a.a, a.b) {
            (Some(x), Some(y)) => nodecurve::rank_experiment(a.g, a.lambda, x, y, a.p, seed, a.trials),
            _ => Err(Error::Usage("rank experiment at t = 0 needs both a and b".into())),
        }
    } else {
        nodecurve::rank_experiment_tpos(a.g, a.lambda, a.t, a.p, seed, a.trials)
    };
    match res {
        Ok(r) => Outcome::ok(envelope("rank-experiment", a, to_value(&r), Some(seed), Some(a.p))),
        Err(e) => fail(e),
    }
}

#[derive(Serialize)]
struct ScriptReport {
    script: String,
    fiber_type: String,
    level: usize,
    rows: Vec<LevelTableRow>,
}

fn cmd_fibers(a: &FibersArgs) -> Outcome {
    let res = match (&a.level, &a.script) {
        (Some(n), _) => fiberclass::enumerate_level_table(*n).map(|t| to_value(&t)),
        (None, Some(s)) => fiberclass::parse_script(s).and_then(|steps| {
            let ft = fiberclass::classify_fiber(&steps)?;
            let rows = fiberclass::enumerate_level_table(ft.level())?
                .into_iter()
                .filter(|r| r.fiber == ft)
                .collect();
            let tokens: Vec<String> = steps.iter().map(|s| s.token().to_string()).collect();
            Ok(to_value(&ScriptReport {
                script: tokens.join(","),
                fiber_type: ft.to_string(),
                level: fiberclass::level(&steps),
                rows,
            }))
        }),
        (None, None) => Err(Error::Usage("give --level or --script".into())),
    };
    match res {
        Ok(v) => Outcome::ok(envelope("fibers", a, v, None, None)),
        Err(e) => fail(e),
    }
}
