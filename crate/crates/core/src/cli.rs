//! The `keisler-lab` command line.
//!
//! Structures are named by a file path or a generator spec:
//!
//! ```text
//! gen:N:R:S:seed=K            random maximal K^R_S-free R-graph on N vertices
//! circulant:N:D1,D2,...       circulant graph with the given connection set
//! search:N:S:TARGET:seed=K    K_S-free graph on N vertices with alpha_S <= TARGET
//! tp2grid:K                   parameterized pairing realizing all K^K paths
//! ```
//!
//! Exit codes: 0 when every certification holds, 2 when one fails (the report
//! is still written), 1 on usage or I/O errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coloring::{
    brute_best, greedy_coloring_traced, guarantee_value, weight_of, WeightedHypergraph, DEFAULT_BRUTE_CAP,
};
use crate::logic::{parse_formula, PhiPartition};
use crate::measures::selfcheck::run_selfcheck;
use crate::rational::{parse_rational, to_json, Rational};
use crate::structures::{
    cyclic_graph, random_maximal_free, search_small_alpha, AnyStructure, Feq2Structure, Hypergraph, SmallAlphaOutcome,
    SmallAlphaSearch, StructureFile,
};
use crate::witnesses::{
    adversary_witness, fam_witness, order_witness, sat_probe, sat_probe_aggregate, tp2_witness, verify_report,
    FamBudget, PathSelection, WitnessError, WitnessReport,
};

pub const THREADS_ENV: &str = "KEISLER_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "keisler-lab",
    version,
    about = "Finite witnesses for average measures in K_s-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a structure from a generator spec and write it as JSON.
    Gen(GenArgs),
    /// Color a weighted hypergraph file and compare with the r!/r^r guarantee.
    Color(ColorArgs),
    /// Approximate p_E by the average over an embedded graph with small alpha.
    Fam(FamArgs),
    /// Sweep the fam pipeline over ambient sizes (CSV by default).
    Sweep(SweepArgs),
    /// Defeat n random (r-1)-tuples with a single new vertex.
    Adversary(AdversaryArgs),
    /// Search a vertex subset for a tuple realizing finitely many phi_R instances.
    Satprobe(SatArgs),
    /// Check rows and paths of the TP2 array in a parameterized pairing.
    Tp2(Tp2Args),
    /// Extend a graph by an alternating vertex over a fresh independent sequence.
    Order(OrderArgs),
    /// Seeded self-tests of the measure algebra.
    CheckMeasures(CheckArgs),
    /// Recompute every certification of a report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write here instead of stdout (atomically).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    spec: String,
    /// Candidate budget for search specs.
    #[arg(long, default_value_t = 2000)]
    budget: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorMethod {
    Greedy,
    Brute,
}

#[derive(Debug, Args)]
struct ColorArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ColorMethod::Greedy)]
    method: ColorMethod,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct FamArgs {
    #[arg(long)]
    phi: String,
    #[arg(long)]
    epsilon: String,
    #[arg(long)]
    graph: String,
    #[arg(long)]
    ambient: String,
    #[arg(long, default_value_t = 3)]
    s: usize,
    /// Node budget for the embedding search.
    #[arg(long)]
    budget: Option<u64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    phi: String,
    #[arg(long)]
    epsilon: String,
    #[arg(long)]
    graph: String,
    /// Comma-separated ambient sizes; each ambient is gen:N:2:S:seed=SEED.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    s: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct AdversaryArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    /// Number of random tuples.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    ambient: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct SatArgs {
    #[arg(long)]
    ambient: String,
    /// M is the first `m` vertices.
    #[arg(long)]
    m: usize,
    /// Explicit parameters; without them, random sets of size --n are drawn.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<usize>>,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct Tp2Args {
    #[arg(long)]
    k: usize,
    /// Structure spec or file; defaults to tp2grid:K.
    #[arg(long)]
    input: Option<String>,
    /// Check this many seeded paths instead of all of them.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct OrderArgs {
    #[arg(long)]
    ambient: String,
    #[arg(long, default_value_t = 3)]
    s: usize,
    #[arg(long)]
    q: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value = "1/4")]
    epsilon: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    report: PathBuf,
    /// `NAME=SPEC` overrides for the recorded input sources.
    #[arg(long)]
    input: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Witness(WitnessError::PreconditionFailed(_)) => 2,
            _ => 1,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn field<T: std::str::FromStr>(text: &str, what: &str, spec: &str) -> Result<T, CliError> {
    text.parse()
        .map_err(|_| usage(format!("bad {what} \"{text}\" in spec \"{spec}\"")))
}

fn seed_field(text: &str, spec: &str) -> Result<u64, CliError> {
    let value = text
        .strip_prefix("seed=")
        .ok_or_else(|| usage(format!("expected seed=K in spec \"{spec}\"")))?;
    field(value, "seed", spec)
}

/// Resolves a generator spec or structure file.
pub fn resolve_structure(spec: &str, budget: u64) -> Result<AnyStructure, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let hyper = |h: Hypergraph| Ok(AnyStructure::Hypergraph(h));
    match parts.as_slice() {
        ["gen", n, r, s, seed] => hyper(
            random_maximal_free(
                field(n, "n", spec)?,
                field(r, "r", spec)?,
                field(s, "s", spec)?,
                seed_field(seed, spec)?,
            )
            .map_err(usage)?,
        ),
        ["circulant", n, ds] => {
            let ds: Result<Vec<usize>, CliError> = ds.split(',').map(|d| field(d, "distance", spec)).collect();
            hyper(cyclic_graph(field(n, "n", spec)?, &ds?).map_err(usage)?)
        }
        ["search", n, s, target, seed] => {
            let config = SmallAlphaSearch::new(
                field(n, "n", spec)?,
                field(s, "s", spec)?,
                field(target, "target", spec)?,
                budget,
                seed_field(seed, spec)?,
            );
            match search_small_alpha(&config).map_err(usage)? {
                SmallAlphaOutcome::Found { graph, .. } => hyper(graph),
                SmallAlphaOutcome::NotFound { best_alpha, .. } => Err(usage(format!(
                    "no graph with alpha <= {} found within the budget (best {best_alpha:?})",
                    config.target
                ))),
            }
        }
        ["tp2grid", k] => Ok(AnyStructure::Feq2(
            Feq2Structure::tp2_grid(field(k, "k", spec)?).map_err(usage)?,
        )),
        [kind, ..] if ["gen", "circulant", "search", "tp2grid"].contains(kind) => {
            Err(usage(format!("malformed spec \"{spec}\"")))
        }
        _ => StructureFile::load(Path::new(spec)).map_err(|e| CliError::Io(e.to_string())),
    }
}

fn resolve_hypergraph(spec: &str) -> Result<Hypergraph, CliError> {
    resolve_structure(spec, 2000)?.into_hypergraph().map_err(usage)
}

/// Writes through a temporary file in the target directory, then renames.
fn emit(out: &OutputArgs, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match &out.output {
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(text.as_bytes()).map_err(io)?;
            tmp.persist(path).map_err(|e| io(e.error))?;
            Ok(())
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values always serialize");
    text.push('\n');
    text
}

fn finish_report(
    mut report: WitnessReport,
    sources: &[(&str, &str)],
    seed: Option<u64>,
    out: &OutputArgs,
) -> Result<i32, CliError> {
    for (name, source) in sources {
        report.set_source(name, *source);
    }
    if let (Some(seed), Value::Object(map)) = (seed, &mut report.params) {
        map.insert("seed".into(), json!(seed));
    }
    emit(out, &report.to_json_string())?;
    for c in report.failed() {
        eprintln!("certification failed: {c}");
    }
    Ok(if report.all_hold() { 0 } else { 2 })
}

fn parse_epsilon(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| usage(format!("--epsilon: {e}")))
}

fn parse_phi(text: &str) -> Result<PhiPartition, CliError> {
    let phi = PhiPartition::infer(parse_formula(text).map_err(|e| usage(format!("--phi: {e}")))?);
    if phi.object_arity() != 1 {
        return Err(usage(format!(
            "--phi must use exactly the object variable x1, found {}",
            phi.object_arity()
        )));
    }
    Ok(phi)
}

fn cmd_gen(args: &GenArgs) -> Result<i32, CliError> {
    let structure = resolve_structure(&args.spec, args.budget)?;
    let mut text = structure.to_file().to_json();
    text.push('\n');
    emit(&args.out, &text)?;
    Ok(0)
}

fn cmd_color(args: &ColorArgs) -> Result<i32, CliError> {
    let h = WeightedHypergraph::load(&args.input).map_err(|e| CliError::Io(e.to_string()))?;
    let guarantee = guarantee_value(&h);
    let value = match args.method {
        ColorMethod::Greedy => {
            let (chi, _) = greedy_coloring_traced(&h);
            let weight = weight_of(&h, &chi).map_err(usage)?;
            let holds = weight >= guarantee;
            json!({
                "method": "greedy",
                "coloring": chi.0,
                "weight": to_json(&weight),
                "total_weight": to_json(h.total_weight()),
                "guarantee": to_json(&guarantee),
                "holds": holds,
            })
        }
        ColorMethod::Brute => {
            let best = brute_best(&h, DEFAULT_BRUTE_CAP).map_err(usage)?;
            let holds = best.best_value >= guarantee && best.average == guarantee;
            json!({
                "method": "brute",
                "coloring": best.best.0,
                "weight": to_json(&best.best_value),
                "average": to_json(&best.average),
                "total_weight": to_json(h.total_weight()),
                "guarantee": to_json(&guarantee),
                "holds": holds,
            })
        }
    };
    emit(&args.out, &pretty(&value))?;
    Ok(if value["holds"] == json!(true) { 0 } else { 2 })
}

fn cmd_fam(args: &FamArgs) -> Result<i32, CliError> {
    let phi = parse_phi(&args.phi)?;
    let eps = parse_epsilon(&args.epsilon)?;
    let graph = resolve_hypergraph(&args.graph)?;
    let ambient = resolve_hypergraph(&args.ambient)?;
    let mut budget = FamBudget::default();
    if let Some(b) = args.budget {
        budget.embed = b;
    }
    let report = fam_witness(&phi, &eps, &ambient, &graph, args.s, budget)?;
    finish_report(
        report,
        &[("ambient", &args.ambient), ("graph", &args.graph)],
        None,
        &args.out,
    )
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32, CliError> {
    let phi = parse_phi(&args.phi)?;
    let eps = parse_epsilon(&args.epsilon)?;
    let graph = resolve_hypergraph(&args.graph)?;
    let mut rows = Vec::new();
    let mut all_hold = true;
    for &n in &args.n {
        let spec = format!("gen:{n}:2:{}:seed={}", args.s, args.seed);
        let ambient = resolve_hypergraph(&spec)?;
        let row = match fam_witness(&phi, &eps, &ambient, &graph, args.s, FamBudget::default()) {
            Ok(report) => {
                all_hold &= report.all_hold();
                let w = &report.witness;
                let bound =
                    w["l"].as_u64().unwrap_or(0) + w["k"].as_u64().unwrap_or(0) * w["alpha"].as_u64().unwrap_or(0);
                json!({
                    "n": n,
                    "ambient": spec,
                    "sup_error": w["approximation"]["sup_error"],
                    "max_violations": w["max_violations"],
                    "violation_bound": bound,
                    "holds": report.all_hold(),
                })
            }
            Err(WitnessError::EmbeddingNotFound(why)) => {
                all_hold = false;
                json!({"n": n, "ambient": spec, "sup_error": Value::Null, "max_violations": Value::Null,
                       "violation_bound": Value::Null, "holds": false, "note": why})
            }
            Err(e) => return Err(e.into()),
        };
        rows.push(row);
    }
    let text = match args.format {
        Format::Json => pretty(&json!({"seed": args.seed, "rows": rows})),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Io(e.to_string());
            w.write_record([
                "n",
                "ambient",
                "sup_error",
                "max_violations",
                "violation_bound",
                "holds",
            ])
            .map_err(io)?;
            for r in &rows {
                let sup = match &r["sup_error"] {
                    Value::Null => String::new(),
                    v => crate::rational::from_json(v).map(|q| q.to_string()).unwrap_or_default(),
                };
                let plain = |v: &Value| if v.is_null() { String::new() } else { v.to_string() };
                w.write_record([
                    r["n"].to_string(),
                    r["ambient"].as_str().unwrap_or_default().to_string(),
                    sup,
                    plain(&r["max_violations"]),
                    plain(&r["violation_bound"]),
                    r["holds"].to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.to_string()))?).expect("csv output is utf-8")
        }
    };
    emit(&args.out, &text)?;
    Ok(if all_hold { 0 } else { 2 })
}

fn cmd_adversary(args: &AdversaryArgs) -> Result<i32, CliError> {
    let ambient = resolve_hypergraph(&args.ambient)?;
    if ambient.arity() != args.r {
        return Err(usage(format!(
            "--r {} does not match the ambient arity {}",
            args.r,
            ambient.arity()
        )));
    }
    if args.n == 0 || ambient.vertex_count() == 0 {
        return Err(usage("need at least one tuple and a nonempty ambient"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let tuples: Vec<Vec<usize>> = (0..args.n)
        .map(|_| (1..args.r).map(|_| rng.gen_range(0..ambient.vertex_count())).collect())
        .collect();
    let report = adversary_witness(&tuples, &ambient, args.s)?;
    finish_report(report, &[("ambient", &args.ambient)], Some(args.seed), &args.out)
}

fn cmd_satprobe(args: &SatArgs) -> Result<i32, CliError> {
    let ambient = resolve_hypergraph(&args.ambient)?;
    if args.m > ambient.vertex_count() {
        return Err(usage(format!(
            "--m {} exceeds the ambient size {}",
            args.m,
            ambient.vertex_count()
        )));
    }
    let model: Vec<usize> = (0..args.m).collect();
    let (report, seed) = match &args.params {
        Some(params) => (sat_probe(&ambient, &model, params)?, None),
        None => (
            sat_probe_aggregate(&ambient, &model, args.n, args.trials, args.seed)?,
            Some(args.seed),
        ),
    };
    finish_report(report, &[("ambient", &args.ambient)], seed, &args.out)
}

fn cmd_tp2(args: &Tp2Args) -> Result<i32, CliError> {
    let spec = args.input.clone().unwrap_or_else(|| format!("tp2grid:{}", args.k));
    let f = match resolve_structure(&spec, 0)? {
        AnyStructure::Feq2(f) => f,
        other => return Err(usage(format!("{spec} is a {}, not a feq2 structure", other.kind()))),
    };
    let selection = match args.sample {
        Some(count) => PathSelection::Sample { seed: args.seed, count },
        None => PathSelection::All,
    };
    let report = tp2_witness(&f, args.k, &selection)?;
    finish_report(report, &[("structure", &spec)], Some(args.seed), &args.out)
}

fn cmd_order(args: &OrderArgs) -> Result<i32, CliError> {
    let ambient = resolve_hypergraph(&args.ambient)?;
    let report = order_witness(&ambient, args.s, args.q)?;
    finish_report(report, &[("ambient", &args.ambient)], None, &args.out)
}

fn cmd_check(args: &CheckArgs) -> Result<i32, CliError> {
    let eps = parse_epsilon(&args.epsilon)?;
    let outcomes = run_selfcheck(args.seed, args.trials, &eps).map_err(usage)?;
    let all = outcomes.iter().all(|c| c.holds());
    let text = match args.format {
        Format::Json => pretty(&json!({
            "seed": args.seed,
            "trials": args.trials,
            "epsilon": to_json(&eps),
            "checks": outcomes,
            "holds": all,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Io(e.to_string());
            w.write_record(["name", "trials", "passed", "skipped", "failures"])
                .map_err(io)?;
            for c in &outcomes {
                w.write_record([
                    c.name.clone(),
                    c.trials.to_string(),
                    c.passed.to_string(),
                    c.skipped.to_string(),
                    c.failures.len().to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.to_string()))?).expect("csv output is utf-8")
        }
    };
    emit(&args.out, &text)?;
    Ok(if all { 0 } else { 2 })
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let text =
        std::fs::read_to_string(&args.report).map_err(|e| CliError::Io(format!("{}: {e}", args.report.display())))?;
    let report = WitnessReport::from_json_str(&text).map_err(|e| usage(format!("malformed report: {e}")))?;
    let mut overrides = BTreeMap::new();
    for item in &args.input {
        let (name, spec) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("--input expects NAME=SPEC, got \"{item}\"")))?;
        overrides.insert(name.to_string(), spec.to_string());
    }
    let mut inputs = BTreeMap::new();
    for (name, record) in &report.inputs {
        let spec = overrides.get(name).unwrap_or(&record.source);
        if spec == "inline" {
            return Err(usage(format!(
                "input \"{name}\" was given inline; pass --input {name}=PATH"
            )));
        }
        inputs.insert(name.clone(), resolve_structure(spec, 2000)?);
    }
    let v = verify_report(&report, &inputs).map_err(usage)?;
    for m in v.digest_mismatches.iter().chain(&v.mismatches) {
        eprintln!("{m}");
    }
    for f in &v.failing {
        eprintln!("certification failed: {f}");
    }
    if v.ok() {
        println!("verified {} certifications of {}", v.recomputed.len(), report.theorem);
        Ok(0)
    } else {
        Ok(2)
    }
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let n: usize = value
            .parse()
            .map_err(|_| usage(format!("{THREADS_ENV} must be a positive integer, got \"{value}\"")))?;
        // A second call in the same process (tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Color(a) => cmd_color(a),
        Command::Fam(a) => cmd_fam(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Adversary(a) => cmd_adversary(a),
        Command::Satprobe(a) => cmd_satprobe(a),
        Command::Tp2(a) => cmd_tp2(a),
        Command::Order(a) => cmd_order(a),
        Command::CheckMeasures(a) => cmd_check(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Runs the command line (`args[0]` is the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_resolve() {
        let c = resolve_hypergraph("circulant:13:1,5").unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (13, 26));
        let g = resolve_hypergraph("gen:20:3:4:seed=2").unwrap();
        assert_eq!(g.arity(), 3);
        assert!(matches!(resolve_structure("tp2grid:2", 0), Ok(AnyStructure::Feq2(_))));
    }

    #[test]
    fn malformed_specs_are_usage_errors() {
        assert!(matches!(resolve_structure("gen:20:2:3", 0), Err(CliError::Usage(_))));
        assert!(matches!(
            resolve_structure("gen:x:2:3:seed=1", 0),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            resolve_structure("circulant:10:1,z", 0),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            resolve_structure("/no/such/file.json", 0),
            Err(CliError::Io(_))
        ));
    }

    #[test]
    fn bad_arguments_exit_one() {
        assert_eq!(run(["keisler-lab", "fam", "--phi", "E(x1"]), 1);
        assert_eq!(run(["keisler-lab", "nonsense"]), 1);
        assert_eq!(run(["keisler-lab", "order", "--ambient", "gen:10:2:3", "--q", "1"]), 1);
    }

    #[test]
    fn precondition_failure_exits_two() {
        let code = run([
            "keisler-lab",
            "fam",
            "--phi",
            "!E(x1,y1) & x1 != y1",
            "--epsilon",
            "4/5",
            "--graph",
            "circulant:5:1",
            "--ambient",
            "gen:30:2:3:seed=1",
        ]);
        assert_eq!(code, 2);
    }
}
