//! The `npbench` command line: generate, verify, solve, evaluate, report.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::eval::{
    accuracy_matrix, cost_report, error_histogram, evaluate, summary_json, to_csv, usage_summary, EvalOptions,
    Grouping, Metric, PriceTable, DEFAULT_CONFIDENCE, DEFAULT_RESAMPLES,
};
use crate::gym::{generate_level_in, list_problems, verify_solution};
use crate::model::{canonical_parse, seed, to_canonical_string, DifficultyLadder, Instance, ProblemId, Solution};
use crate::oracle::OracleBudget;
use crate::solver::{
    append_log, extract_solution, read_log, run_batch_with, Backend, FixtureBackend, HttpBackend, OracleBackend,
    RandomBackend, Sampling, SolverConfig, TrialRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARTIAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "npbench", version, about = "Generate, verify, solve and evaluate NP-complete benchmark instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List problems and their published levels.
    Problems(LadderArg),
    /// Write instances with planted solutions, one JSON document per line.
    Generate(GenerateArgs),
    /// Check a candidate solution (or a raw model response) against an instance.
    Verify(VerifyArgs),
    /// Run a solver backend over problems and levels, appending to a trial log.
    Solve(SolveArgs),
    /// Aggregate accuracy with bootstrap confidence intervals.
    Evaluate(EvaluateArgs),
    /// Token usage, aha moments, error counts and costs from trial logs.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
struct LadderArg {
    /// JSON file of extra or replacement levels, merged over the builtin ladder.
    #[arg(long)]
    ladder: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    problem: String,
    #[arg(long)]
    level: u32,
    #[arg(long, default_value_t = 1)]
    count: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    ladder: LadderArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Instance document, or a line written by `generate`.
    #[arg(long)]
    instance: PathBuf,
    /// Candidate solution as JSON, e.g. '[true,false]'.
    #[arg(long, conflicts_with = "response")]
    solution: Option<String>,
    /// File holding a raw model response to extract the solution from.
    #[arg(long)]
    response: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BackendKind {
    Http,
    Oracle,
    Random,
    Fixture,
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Problem names, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', required = true)]
    problem: Vec<String>,
    /// Levels such as `1`, `1,3,5` or `1-10`; every published level when absent.
    #[arg(long, alias = "level")]
    levels: Option<String>,
    #[arg(long, alias = "seed", value_delimiter = ',', default_values_t = [42u64, 53, 64])]
    seeds: Vec<u64>,
    #[arg(long, default_value_t = 30)]
    trials: u32,
    #[arg(long, default_value_t = 1)]
    shots: usize,
    #[arg(long, value_enum)]
    backend: BackendKind,
    /// Chat-completions URL for the http backend.
    #[arg(long)]
    endpoint: Option<String>,
    /// Model name sent to the http backend, and the label recorded in the log.
    #[arg(long)]
    model: Option<String>,
    /// Trial log replayed by the fixture backend.
    #[arg(long)]
    fixture: Option<PathBuf>,
    /// Seed of the random backend.
    #[arg(long, default_value_t = 0)]
    random_seed: u64,
    #[arg(long, default_value_t = 10)]
    batch_size: usize,
    #[arg(long, default_value_t = 3)]
    max_tries: u32,
    #[arg(long, default_value_t = 1000)]
    retry_backoff_ms: u64,
    #[arg(long)]
    temperature: Option<f64>,
    #[arg(long)]
    top_p: Option<f64>,
    #[arg(long)]
    max_tokens: Option<u32>,
    /// Send no sampling settings, leaving the server's defaults.
    #[arg(long)]
    server_sampling: bool,
    /// Oracle search budget in visited states.
    #[arg(long, default_value_t = OracleBudget::default().max_states)]
    oracle_states: u64,
    /// Trial log to append to. Trials already in it are skipped.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    ladder: LadderArg,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    /// Trial logs to read.
    #[arg(long = "log", required = true)]
    logs: Vec<PathBuf>,
    /// Metrics to report; all four when absent.
    #[arg(long, value_delimiter = ',')]
    metric: Vec<Metric>,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    #[arg(long, default_value_t = DEFAULT_RESAMPLES)]
    resamples: usize,
    #[arg(long, default_value_t = DEFAULT_CONFIDENCE)]
    confidence: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Pool trials over seeds within each task instead of using per-seed accuracies.
    #[arg(long)]
    joint: bool,
    /// Report rows: overall, problem, level.
    #[arg(long, value_delimiter = ',', default_values = ["overall", "problem", "level"])]
    group: Vec<String>,
    /// CSV report path.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// JSON summary path.
    #[arg(long, alias = "out")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[arg(long = "log", required = true)]
    logs: Vec<PathBuf>,
    /// Price table JSON: {"model": {"prompt": 0.15, "completion": 0.6, "currency": "USD"}}.
    #[arg(long)]
    prices: Option<PathBuf>,
    /// Write the report as JSON here as well as printing it.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Problems(a) => cmd_problems(&a, out),
        Command::Generate(a) => cmd_generate(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Evaluate(a) => cmd_evaluate(&a, out, err),
        Command::Report(a) => cmd_report(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io<T>(r: std::io::Result<T>) -> Result<T> {
    Ok(r?)
}

fn load_ladder(arg: &LadderArg) -> Result<DifficultyLadder> {
    match &arg.ladder {
        Some(path) => DifficultyLadder::builtin().with_overrides(&fs::read_to_string(path)?),
        None => Ok(DifficultyLadder::builtin().clone()),
    }
}

/// Accepts canonical names and looser spellings such as `vertex-cover` or `3sat`.
fn parse_problem(name: &str) -> Result<ProblemId> {
    if let Ok(p) = name.parse() {
        return Ok(p);
    }
    let squash = |s: &str| s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
    let wanted = squash(name);
    ProblemId::ALL
        .into_iter()
        .find(|p| squash(p.name()) == wanted || squash(&format!("{p:?}")) == wanted)
        .ok_or_else(|| Error::UnknownProblem(name.to_string()))
}

fn parse_levels(spec: &str) -> Result<Vec<u32>> {
    let bad = || Error::Config(format!("bad level list `{spec}`"));
    let mut levels = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (u32, u32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b {
                    return Err(bad());
                }
                levels.extend(a..=b);
            }
            None => levels.push(part.parse().map_err(|_| bad())?),
        }
    }
    levels.sort_unstable();
    levels.dedup();
    if levels.is_empty() {
        return Err(bad());
    }
    Ok(levels)
}

fn cmd_problems(args: &LadderArg, out: &mut dyn Write) -> Result<i32> {
    let ladder = load_ladder(args)?;
    for d in list_problems() {
        let kind = if d.id.is_core() { "core" } else { "extension" };
        io(writeln!(out, "{:<24} {:<9} levels 1-{}", d.id.name(), kind, ladder.max_level(d.id)))?;
    }
    Ok(EXIT_OK)
}

fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ladder = load_ladder(&args.ladder)?;
    let problem = parse_problem(&args.problem)?;
    ladder.level_config(problem, args.level)?;
    let mut text = String::new();
    let mut verified = 0;
    for i in 0..args.count {
        let pair = generate_level_in(&ladder, problem, args.level, seed::trial_seed(args.seed, problem, args.level, i))?;
        verified += u32::from(verify_solution(&pair.instance, &pair.planted).ok);
        let doc = json!({"instance": serde_json::to_value(&pair.instance)?, "planted": pair.planted.0});
        text.push_str(&to_canonical_string(&doc)?);
        text.push('\n');
    }
    match &args.out {
        Some(path) => fs::write(path, &text)?,
        None => io(out.write_all(text.as_bytes()))?,
    }
    io(writeln!(err, "self-check: {verified}/{} planted solutions verified", args.count))?;
    Ok(if verified == args.count { EXIT_OK } else { EXIT_PARTIAL })
}

/// Reads an instance document or a `generate` line (first non-empty line).
fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path)?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let doc: Value = serde_json::from_str(line).or_else(|_| serde_json::from_str(&text))?;
    let inner = doc.get("instance").cloned().unwrap_or(doc);
    canonical_parse(inner.to_string().as_bytes())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let instance = read_instance(&args.instance)?;
    let candidate = match (&args.solution, &args.response) {
        (Some(s), _) => serde_json::from_str(s)?,
        (None, Some(path)) => match extract_solution(&fs::read_to_string(path)?) {
            Ok(v) => v,
            Err(e) => {
                let outcome = crate::model::VerifyOutcome::reject(crate::model::ErrorCode::JSON, e.0);
                io(writeln!(out, "{}", serde_json::to_string(&outcome)?))?;
                return Ok(EXIT_PARTIAL);
            }
        },
        (None, None) => return Err(Error::Config("give --solution or --response".into())),
    };
    let outcome = verify_solution(&instance, &Solution(candidate));
    io(writeln!(out, "{}", serde_json::to_string(&outcome)?))?;
    Ok(if outcome.ok { EXIT_OK } else { EXIT_PARTIAL })
}

fn build_backend(args: &SolveArgs) -> Result<Box<dyn Backend>> {
    Ok(match args.backend {
        BackendKind::Oracle => Box::new(OracleBackend {
            budget: OracleBudget { max_states: args.oracle_states, ..OracleBudget::default() },
        }),
        BackendKind::Random => Box::new(RandomBackend { seed: args.random_seed }),
        BackendKind::Fixture => {
            let path = args.fixture.as_ref().ok_or_else(|| Error::Config("the fixture backend needs --fixture".into()))?;
            Box::new(FixtureBackend::from_log(args.model.clone().unwrap_or_else(|| "fixture".into()), path)?)
        }
        BackendKind::Http => Box::new(HttpBackend::from_env(args.endpoint.clone(), args.model.clone())?),
    })
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ladder = load_ladder(&args.ladder)?;
    let problems: Vec<ProblemId> = if args.problem.iter().any(|p| p.eq_ignore_ascii_case("all")) {
        ProblemId::ALL.to_vec()
    } else {
        args.problem.iter().map(|p| parse_problem(p)).collect::<Result<_>>()?
    };
    let explicit_levels = args.levels.as_deref().map(parse_levels).transpose()?;
    let mut plan = Vec::new();
    for &problem in &problems {
        let levels: Vec<u32> = match &explicit_levels {
            Some(levels) => levels.clone(),
            None => ladder.levels(problem).map(|(l, _)| l).collect(),
        };
        for &level in &levels {
            ladder.level_config(problem, level)?;
        }
        plan.push((problem, levels));
    }

    let sampling = if args.server_sampling {
        Sampling::default()
    } else {
        let base = Sampling::self_hosted();
        Sampling {
            temperature: args.temperature.or(base.temperature),
            top_p: args.top_p.or(base.top_p),
            max_tokens: args.max_tokens.or(base.max_tokens),
        }
    };
    let config = SolverConfig {
        n_shots: args.shots,
        n_trials: args.trials,
        batch_size: args.batch_size,
        max_tries: args.max_tries,
        seeds: args.seeds.clone(),
        sampling,
        retry_backoff: Duration::from_millis(args.retry_backoff_ms),
        model_label: args.model.clone(),
        ..SolverConfig::default()
    };
    config.validate()?;
    let backend = build_backend(args)?;

    let done = if args.out.exists() {
        let log = read_log(&args.out)?;
        for (line, e) in &log.malformed {
            io(writeln!(err, "warning: {}:{line}: skipped malformed record: {e}", args.out.display()))?;
        }
        log.keys()
    } else {
        Default::default()
    };

    let mut tally: BTreeMap<(ProblemId, u32), (u64, u64)> = BTreeMap::new();
    let mut failed = Vec::new();
    let mut skipped = 0;
    for (problem, levels) in &plan {
        for &level in levels {
            for &s in &config.seeds {
                skipped += (0..config.n_trials)
                    .filter(|&t| done.contains(&crate::solver::TrialKey { problem: *problem, level, seed: s, trial_index: t }))
                    .count();
            }
        }
        run_batch_with(&ladder, *problem, levels, backend.as_ref(), &config, &done, &mut |record: TrialRecord| {
            append_log(&args.out, std::slice::from_ref(&record))?;
            let t = tally.entry((record.problem, record.level)).or_default();
            t.0 += u64::from(record.ok());
            t.1 += 1;
            if let Some(e) = &record.backend_error {
                failed.push(format!(
                    "{} level {} seed {} trial {}: {e}",
                    record.problem, record.level, record.seed, record.trial_index
                ));
            }
            Ok(())
        })?;
    }

    if skipped > 0 {
        io(writeln!(out, "skipped {skipped} trials already in {}", args.out.display()))?;
    }
    for ((problem, level), (ok, n)) in &tally {
        io(writeln!(out, "{problem} level {level}: accuracy {:.2} ({ok}/{n})", *ok as f64 / *n as f64))?;
    }
    if !failed.is_empty() {
        io(writeln!(out, "{} trials failed in transport:", failed.len()))?;
        for f in &failed {
            io(writeln!(out, "  {f}"))?;
        }
        return Ok(EXIT_PARTIAL);
    }
    Ok(EXIT_OK)
}

fn load_records(paths: &[PathBuf], err: &mut dyn Write) -> Result<Vec<TrialRecord>> {
    let mut records = Vec::new();
    for path in paths {
        let log = read_log(path)?;
        for (line, e) in &log.malformed {
            io(writeln!(err, "warning: {}:{line}: skipped malformed record: {e}", path.display()))?;
        }
        if !log.malformed.is_empty() {
            io(writeln!(err, "warning: {} malformed lines skipped in {}", log.malformed.len(), path.display()))?;
        }
        records.extend(log.records);
    }
    Ok(records)
}

fn cmd_evaluate(args: &EvaluateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let records = load_records(&args.logs, err)?;
    if records.is_empty() {
        io(writeln!(err, "error: no records"))?;
        return Ok(EXIT_USAGE);
    }
    let groupings = args
        .group
        .iter()
        .map(|g| match g.as_str() {
            "overall" => Ok(Grouping::Overall),
            "problem" => Ok(Grouping::Problem),
            "level" => Ok(Grouping::Level),
            other => Err(Error::Config(format!("unknown grouping `{other}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let options = EvalOptions {
        metrics: if args.metric.is_empty() { Metric::ALL.to_vec() } else { args.metric.clone() },
        gamma: args.gamma,
        resamples: args.resamples,
        confidence: args.confidence,
        seed: args.seed,
        joint: args.joint,
        groupings,
    };
    let matrix = accuracy_matrix(&records);
    let reports = evaluate(&matrix, &options)?;
    for r in reports.iter().filter(|r| r.problem.is_none() && r.level.is_none()) {
        io(writeln!(out, "{:<20} {:<15} {:.4} [{:.4}, {:.4}]", r.model, r.metric, r.value, r.ci_low, r.ci_high))?;
    }
    if let Some(path) = &args.csv {
        fs::write(path, to_csv(&reports))?;
    }
    if let Some(path) = &args.json {
        let doc = summary_json(&matrix, &reports, &options)?;
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    Ok(EXIT_OK)
}

fn cmd_report(args: &ReportArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let records = load_records(&args.logs, err)?;
    if records.is_empty() {
        io(writeln!(err, "error: no records"))?;
        return Ok(EXIT_USAGE);
    }
    let mut doc = serde_json::Map::new();

    io(writeln!(out, "model,problem,level,trials,mean_prompt_tokens,mean_completion_tokens,mean_aha,length_capped"))?;
    let mut usage = Vec::new();
    for ((model, problem, level), s) in usage_summary(&records) {
        io(writeln!(
            out,
            "{model},{problem},{level},{},{:.1},{:.1},{:.2},{}",
            s.trials,
            s.mean_prompt_tokens(),
            s.mean_completion_tokens(),
            s.mean_aha(),
            s.length_capped
        ))?;
        usage.push(json!({"model": model, "problem": problem, "level": level, "stats": s}));
    }
    doc.insert("usage".into(), Value::Array(usage));

    let mut errors = Vec::new();
    for ((model, level), counts) in error_histogram(&records) {
        let line: Vec<String> = counts.iter().map(|(code, n)| format!("{code}: {n}")).collect();
        io(writeln!(out, "errors {model} level {level}: {}", line.join(", ")))?;
        let counts: Vec<Value> = counts.into_iter().map(|(code, n)| json!({"code": code, "count": n})).collect();
        errors.push(json!({"model": model, "level": level, "counts": counts}));
    }
    doc.insert("errors".into(), Value::Array(errors));

    if let Some(path) = &args.prices {
        let prices = PriceTable::from_json(&serde_json::from_str(&fs::read_to_string(path)?)?)?;
        let mut costs = Vec::new();
        for line in cost_report(&records, &prices)? {
            io(writeln!(
                out,
                "cost {}: {} prompt + {} completion tokens = {} {}",
                line.model,
                line.prompt_tokens,
                line.completion_tokens,
                line.display_total(),
                line.currency
            ))?;
            costs.push(json!({
                "model": line.model,
                "currency": line.currency,
                "prompt_tokens": line.prompt_tokens,
                "completion_tokens": line.completion_tokens,
                "total": line.display_total(),
            }));
        }
        doc.insert("costs".into(), Value::Array(costs));
    }
    if let Some(path) = &args.out {
        fs::write(path, serde_json::to_string_pretty(&Value::Object(doc))? + "\n")?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_lists() {
        assert_eq!(parse_levels("1-3,5").unwrap(), vec![1, 2, 3, 5]);
        assert_eq!(parse_levels("2").unwrap(), vec![2]);
        assert!(parse_levels("3-1").is_err());
        assert!(parse_levels("x").is_err());
    }

    #[test]
    fn loose_problem_names() {
        assert_eq!(parse_problem("vertex-cover").unwrap(), ProblemId::VertexCover);
        assert_eq!(parse_problem("3sat").unwrap(), ProblemId::ThreeSat);
        assert_eq!(parse_problem("3-SAT").unwrap(), ProblemId::ThreeSat);
        assert!(parse_problem("chess").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["npbench", "frobnicate"], &mut out, &mut err), EXIT_USAGE);
        let args = ["npbench", "generate", "--problem", "3SAT", "--level", "99"];
        assert_eq!(run(args, &mut out, &mut err), EXIT_USAGE);
    }
}
