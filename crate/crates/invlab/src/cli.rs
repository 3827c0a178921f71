//! Command line surface: one binary with subcommands over the library.
//!
//! Exit codes are stable: 0 for success (for `verify`, the property holds),
//! 1 when `verify` finds the property false or `exact` ends without a
//! definitive value, 2 for any error (bad arguments, unreadable or malformed
//! input, violated preconditions). Every JSON report carries the invoking
//! command line in its `spec` field; CSV output repeats it in a leading `#`
//! comment line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certificate::{Certificate, Property};
use crate::connectivity::{is_eulerian, is_k_arc_strong, is_k_strong, CutWitness};
use crate::construct;
use crate::digraph::{Digraph, Tournament};
use crate::error::Error;
use crate::exact::{
    census_row, cut_cover_number, sinv_exact_jobs, CensusRow, CutCoverMode, Goal, SearchBudget,
    SinvOutcome,
};
use crate::gadgets;
use crate::graph::SimpleGraph;
use crate::io::{emit_dg, emit_trn, parse_dg, parse_trn, to_dot};
use crate::randomized::{self, RandomizedConfig};

/// Environment variable overriding the node budget of the exact search.
pub const NODE_CAP_ENV: &str = "INVLAB_NODE_CAP";

#[derive(Parser)]
#[command(
    name = "invlab",
    version,
    about = "Digraph inversions: verify, solve, construct, and generate",
    after_help = "Exit codes: 0 success / property holds, 1 property fails or \
                  value unknown, 2 error.\nSet INVLAB_NODE_CAP to override the \
                  exact search node budget."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a property of a digraph and print a verdict with a witness.
    Verify(VerifyArgs),
    /// Minimum inversion family size by exhaustive search, with a family.
    Exact(ExactArgs),
    /// Build a verified inversion family by one of the constructive methods.
    Construct(ConstructArgs),
    /// Run a seeded randomized construction, optionally as a trial batch.
    Random(RandomArgs),
    /// Emit a generated instance to files plus a JSON sidecar of its
    /// expected property.
    Gadget(GadgetArgs),
    /// Print a CSV table of known values or method thresholds.
    Table(TableArgs),
    /// Worst-case minimum family sizes over all tournament classes of one
    /// order.
    Census(CensusArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Input file, .trn or .dg.
    file: PathBuf,
    #[arg(long, value_enum)]
    property: PropertyKind,
    /// Strength parameter for k-strong and k-arc-strong.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Also write a DOT rendering of the input here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyKind {
    Acyclic,
    KStrong,
    KArcStrong,
    Eulerian,
}

#[derive(Args)]
struct ExactArgs {
    /// Input file, .trn or .dg.
    file: PathBuf,
    #[arg(long, value_enum)]
    goal: GoalKind,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Largest family size to try before settling for a lower bound.
    #[arg(long, default_value_t = 4)]
    max_t: usize,
    /// Worker threads splitting the search space.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalKind {
    Acyclic,
    KStrong,
    KArcStrong,
}

#[derive(Args)]
struct ConstructArgs {
    /// Input tournament (.trn); not used by --method tt.
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    method: ConstructMethod,
    /// Target strength; fixed at 1 and 2 for k1 and k2 respectively.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Order of the transitive tournament for --method tt.
    #[arg(long)]
    n: Option<usize>,
    /// Target tournament for --method transform.
    #[arg(long)]
    target: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructMethod {
    /// One inversion set making any tournament strong.
    K1,
    /// At most two sets reaching 2-strong.
    K2,
    /// In-degree sweep, at most 2k sets.
    Sweep2k,
    /// Minimum family for a transitive tournament, from the closed form.
    Tt,
    /// One set reaching k-arc-strong on orders at least 19k-2.
    One19k,
    /// Three sets reaching k-arc-strong on orders at least 11k-2.
    Three11k,
    /// One set reaching k-strong via a dominant layer, when one exists.
    Layered,
    /// Family turning the input into the --target tournament.
    Transform,
}

#[derive(Args)]
struct RandomArgs {
    /// Input tournament (.trn).
    file: PathBuf,
    #[arg(long, value_enum)]
    method: RandomMethod,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Seed for all randomness; there is no clock fallback.
    #[arg(long)]
    seed: u64,
    /// Retry budget per run.
    #[arg(long, default_value_t = 64)]
    retries: u64,
    /// Run this many independent trials (seeded seed, seed+1, ...) and
    /// print a CSV of outcomes instead of one certificate.
    #[arg(long)]
    trials: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomMethod {
    /// Random vector labeling reaching k-strong.
    Vectors,
    /// Balanced pipeline for orders exactly 2k+1.
    Mkstrich,
    /// Driver combining the sweep bound with randomized improvement.
    Upperm,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long, value_enum)]
    kind: GadgetKind,
    /// Output prefix; writes PREFIX.dg or PREFIX.trn plus PREFIX.json.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    /// Level count for --kind sizet.
    #[arg(long)]
    t: Option<usize>,
    /// Order for --kind arbn1 and extreminf.
    #[arg(long)]
    n: Option<usize>,
    /// Variable count for --kind meksat.
    #[arg(long)]
    vars: Option<usize>,
    /// Clause count for --kind meksat.
    #[arg(long)]
    clauses: Option<usize>,
    /// Base graph for the cover gadgets: complete:N, cycle:N, path:N, or
    /// gnp:N:P (gnp needs --seed).
    #[arg(long)]
    graph: Option<String>,
    /// Seed for random pieces; required by meksat and gnp graphs.
    #[arg(long)]
    seed: Option<u64>,
    /// Also write PREFIX.dot.
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    /// Reduction digraph of a random monotone equitable instance.
    Meksat,
    /// Graph gadget whose k-arc-strong inversion number is the cut cover
    /// number.
    CcArc,
    /// Graph gadget whose k-strong inversion number is the cut cover number.
    CcVertex,
    /// Pair catcher digraph keeping a sink or source through t-1 inversions.
    Sizet,
    /// Pair catcher padded to an exact order.
    Arbn1,
    /// Padded witness joined to a digon clique, 2k-edge-connected.
    Extreminf,
    /// Tournament of order 5k-3 needing more than one set for k-strong.
    T1,
    /// Tournament of order 4k-2 needing more than one set for k-arc-strong.
    T2,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// First order; required for m-k and tt.
    #[arg(long)]
    n_from: Option<usize>,
    /// Last order, inclusive; required for m-k and tt.
    #[arg(long)]
    n_to: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Family size cap for the underlying exact searches.
    #[arg(long, default_value_t = 4)]
    max_t: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Worst-case minimum family sizes per order, by exhaustive census.
    #[value(name = "m-k")]
    MK,
    /// Minimum family sizes of transitive tournaments, by construction.
    Tt,
    /// Order thresholds of the constructive methods and their family bounds.
    Thresholds,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Family size cap for the per-class searches.
    #[arg(long, default_value_t = 4)]
    max_t: usize,
}

/// Parses arguments from the environment, runs the chosen subcommand, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Exact(args) => cmd_exact(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Random(args) => cmd_random(args),
        Command::Gadget(args) => cmd_gadget(args),
        Command::Table(args) => cmd_table(args),
        Command::Census(args) => cmd_census(args),
    }
}

fn spec_string() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn read_digraph(path: &Path) -> Result<Digraph, Error> {
    let text = fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("trn") => Ok(parse_trn(&text)?.into_digraph()),
        Some("dg") => parse_dg(&text),
        _ => Err(Error::Invalid(format!(
            "cannot tell the format of {}; use a .trn or .dg extension",
            path.display()
        ))),
    }
}

fn read_tournament(path: &Path) -> Result<Tournament, Error> {
    let text = fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("trn") => parse_trn(&text),
        Some("dg") => Tournament::try_new(parse_dg(&text)?),
        _ => Err(Error::Invalid(format!(
            "cannot tell the format of {}; use a .trn or .dg extension",
            path.display()
        ))),
    }
}

fn budget_from(max_t: usize) -> Result<SearchBudget, Error> {
    let mut budget = SearchBudget {
        max_t,
        ..SearchBudget::default()
    };
    if let Ok(raw) = std::env::var(NODE_CAP_ENV) {
        budget.node_cap = raw
            .parse()
            .map_err(|_| Error::Invalid(format!("{NODE_CAP_ENV} is not a number: {raw:?}")))?;
    }
    Ok(budget)
}

/// Writes one line to stdout. A reader that hangs up early (for example
/// `invlab table | head`) ends the run quietly; other write failures are
/// real errors.
fn emit(line: &str) -> Result<(), Error> {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    let done = out
        .write_all(line.as_bytes())
        .and_then(|()| out.write_all(b"\n"));
    match done {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(e.into()),
    }
}

fn print_json<T: Serialize>(report: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))?;
    emit(&text)
}

#[derive(Serialize)]
struct VerifyReport {
    spec: String,
    file: String,
    order: usize,
    arc_count: usize,
    property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<CutWitness>,
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    let d = read_digraph(&args.file)?;
    if let Some(dot_path) = &args.dot {
        fs::write(dot_path, to_dot(&d))?;
    }
    let (property, k, holds, witness) = match args.property {
        PropertyKind::Acyclic => ("acyclic".to_string(), None, d.is_acyclic(), None),
        PropertyKind::KStrong => {
            let v = is_k_strong(&d, args.k);
            (
                format!("{}-strong", args.k),
                Some(args.k),
                v.holds,
                v.witness,
            )
        }
        PropertyKind::KArcStrong => {
            let v = is_k_arc_strong(&d, args.k)?;
            (
                format!("{}-arc-strong", args.k),
                Some(args.k),
                v.holds,
                v.witness,
            )
        }
        PropertyKind::Eulerian => ("eulerian".to_string(), None, is_eulerian(&d), None),
    };
    let report = VerifyReport {
        spec: spec_string(),
        file: args.file.display().to_string(),
        order: d.n(),
        arc_count: d.arc_count(),
        property,
        k,
        holds,
        witness,
    };
    print_json(&report)?;
    Ok(if report.holds { 0 } else { 1 })
}

#[derive(Serialize)]
struct ExactReport {
    spec: String,
    file: String,
    goal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    outcome: SinvOutcome,
    summary: String,
}

fn cmd_exact(args: ExactArgs) -> Result<i32, Error> {
    let d = read_digraph(&args.file)?;
    let (goal, name, k) = match args.goal {
        GoalKind::Acyclic => (Goal::Acyclic, "acyclic".to_string(), None),
        GoalKind::KStrong => (
            Goal::KStrong { k: args.k },
            format!("{}-strong", args.k),
            Some(args.k),
        ),
        GoalKind::KArcStrong => (
            Goal::KArcStrong { k: args.k },
            format!("{}-arc-strong", args.k),
            Some(args.k),
        ),
    };
    let budget = budget_from(args.max_t)?;
    let outcome = sinv_exact_jobs(&d, goal, &budget, args.jobs)?;
    let summary = outcome.describe();
    let definitive = matches!(outcome, SinvOutcome::Exact { .. });
    let report = ExactReport {
        spec: spec_string(),
        file: args.file.display().to_string(),
        goal: name,
        k,
        outcome,
        summary,
    };
    print_json(&report)?;
    Ok(if definitive { 0 } else { 1 })
}

#[derive(Serialize)]
struct ConstructReport {
    spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
    method: String,
    certificate: Certificate,
}

fn cmd_construct(args: ConstructArgs) -> Result<i32, Error> {
    let input = |file: &Option<PathBuf>| -> Result<Tournament, Error> {
        match file {
            Some(path) => read_tournament(path),
            None => Err(Error::Invalid(
                "this method needs an input tournament file".into(),
            )),
        }
    };
    let (method, certificate) = match args.method {
        ConstructMethod::K1 => ("k1", construct::make_strong_k1(&input(&args.file)?)?),
        ConstructMethod::K2 => ("k2", construct::make_2strong(&input(&args.file)?)?),
        ConstructMethod::Sweep2k => (
            "sweep2k",
            construct::make_kstrong_2k(&input(&args.file)?, args.k)?,
        ),
        ConstructMethod::Tt => {
            let n = args.n.ok_or_else(|| {
                Error::Invalid("--method tt needs --n, the transitive order".into())
            })?;
            ("tt", construct::tt_construct(n, args.k)?)
        }
        ConstructMethod::One19k => (
            "one19k",
            construct::single_inversion_19k(&input(&args.file)?, args.k)?,
        ),
        ConstructMethod::Three11k => (
            "three11k",
            construct::three_inversions_11k(&input(&args.file)?, args.k)?,
        ),
        ConstructMethod::Layered => (
            "layered",
            construct::single_inversion_layered(&input(&args.file)?, args.k)?,
        ),
        ConstructMethod::Transform => {
            let t = input(&args.file)?;
            let target_path = args.target.as_ref().ok_or_else(|| {
                Error::Invalid("--method transform needs --target, the goal tournament".into())
            })?;
            let target = read_tournament(target_path)?;
            let family = construct::transform_between(&t, &target)?;
            let property = Property::EqualsTarget {
                target_arcs: target.as_digraph().arcs().collect(),
            };
            let cert = Certificate::new(property, family, "pairwise disagreement split")
                .verify(t.as_digraph());
            if !cert.verified {
                return Err(Error::VerificationFailed(
                    "transform family does not produce the target".into(),
                ));
            }
            ("transform", cert)
        }
    };
    let report = ConstructReport {
        spec: spec_string(),
        file: args.file.as_ref().map(|p| p.display().to_string()),
        method: method.to_string(),
        certificate,
    };
    print_json(&report)?;
    Ok(0)
}

#[derive(Serialize)]
struct RandomReport {
    spec: String,
    file: String,
    method: String,
    k: usize,
    seed: u64,
    certificate: Certificate,
}

fn cmd_random(args: RandomArgs) -> Result<i32, Error> {
    let t = read_tournament(&args.file)?;
    let run_once = |seed: u64| -> Result<Certificate, Error> {
        let cfg = RandomizedConfig {
            seed,
            max_retries: args.retries,
            ..RandomizedConfig::default()
        };
        match args.method {
            RandomMethod::Vectors => randomized::random_kstrong_vectors(&t, args.k, &cfg),
            RandomMethod::Mkstrich => randomized::mkstrich_pipeline(&t, args.k, &cfg),
            RandomMethod::Upperm => randomized::upper_mprime_driver(&t, args.k, &cfg),
        }
    };
    let method = match args.method {
        RandomMethod::Vectors => "vectors",
        RandomMethod::Mkstrich => "mkstrich",
        RandomMethod::Upperm => "upperm",
    };
    match args.trials {
        None => {
            let certificate = run_once(args.seed)?;
            let report = RandomReport {
                spec: spec_string(),
                file: args.file.display().to_string(),
                method: method.to_string(),
                k: args.k,
                seed: args.seed,
                certificate,
            };
            print_json(&report)?;
            Ok(0)
        }
        Some(trials) => {
            emit(&format!("# {}", spec_string()))?;
            emit("trial,outcome,family_size")?;
            for trial in 0..trials {
                match run_once(args.seed + trial) {
                    Ok(cert) if cert.verified => {
                        emit(&format!("{trial},ok,{}", cert.family_size))?;
                    }
                    Ok(_) => emit(&format!("{trial},unverified,"))?,
                    Err(Error::RetriesExhausted { .. }) => {
                        emit(&format!("{trial},retries-exhausted,"))?
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct GadgetReport {
    spec: String,
    kind: String,
    order: usize,
    written: Vec<String>,
}

fn cmd_gadget(args: GadgetArgs) -> Result<i32, Error> {
    let need = |opt: Option<usize>, flag: &str| -> Result<usize, Error> {
        opt.ok_or_else(|| Error::Invalid(format!("this kind needs {flag}")))
    };
    let k = args.k.unwrap_or(1);
    // Tournaments go to .trn, everything else to .dg.
    let (kind, body, extension, expected) = match args.kind {
        GadgetKind::Meksat => {
            let vars = need(args.vars, "--vars")?;
            let clauses = need(args.clauses, "--clauses")?;
            let seed = args
                .seed
                .ok_or_else(|| Error::Invalid("meksat needs --seed".into()))?;
            let inst = gadgets::random_meksat(k, vars, clauses, seed)?;
            let d = gadgets::meksat_digraph(&inst)?;
            let satisfiable = if vars <= gadgets::BRUTE_FORCE_VAR_MAX {
                Some(inst.brute_force_satisfiable()?)
            } else {
                None
            };
            let expected = serde_json::json!({
                "instance": inst,
                "satisfiable": satisfiable,
                "claim": format!(
                    "the instance is satisfiable iff one inversion makes the \
                     digraph {k}-strong iff one inversion makes it {k}-arc-strong"
                ),
            });
            ("meksat", emit_dg(&d), "dg", expected)
        }
        GadgetKind::CcArc | GadgetKind::CcVertex => {
            let spec = args
                .graph
                .as_deref()
                .ok_or_else(|| Error::Invalid("cover gadgets need --graph".into()))?;
            let g = parse_graph_spec(spec, args.seed)?;
            let cover = cut_cover_number(&g, CutCoverMode::Formula)?;
            let family = gadgets::lifted_cut_cover(&g, k)?;
            let (name, d, goal) = match args.kind {
                GadgetKind::CcArc => (
                    "cc-arc",
                    gadgets::cutcover_to_arcstrong(&g, k)?,
                    format!("{k}-arc-strong"),
                ),
                _ => (
                    "cc-vertex",
                    gadgets::cutcover_to_strong(&g, k)?,
                    format!("{k}-strong"),
                ),
            };
            let expected = serde_json::json!({
                "base_graph": { "order": g.n(), "edges": g.edges() },
                "goal": goal,
                "minimum_family_size": cover,
                "upper_family": family.sets,
            });
            (name, emit_dg(&d), "dg", expected)
        }
        GadgetKind::Sizet => {
            let t = need(args.t, "--t")?;
            let (d, s) = gadgets::witness_sizet(t)?;
            let expected = serde_json::json!({
                "special_vertex": s,
                "claim": format!(
                    "after any family of at most {} inversions, some vertex \
                     other than {s} is a sink or a source",
                    t - 1
                ),
            });
            ("sizet", emit_dg(&d), "dg", expected)
        }
        GadgetKind::Arbn1 => {
            let n = need(args.n, "--n")?;
            let d = gadgets::witness_arbn1(n)?;
            let expected = serde_json::json!({
                "claim": format!(
                    "after any family of at most {} inversions, some vertex \
                     is a sink or a source",
                    survives_bound(n)
                ),
            });
            ("arbn1", emit_dg(&d), "dg", expected)
        }
        GadgetKind::Extreminf => {
            let n = need(args.n, "--n")?;
            let d = gadgets::witness_extreminf(n, k)?;
            let expected = serde_json::json!({
                "underlying_edge_connectivity_at_least": 2 * k,
                "claim": format!(
                    "no family of at most {} inversions makes the digraph \
                     {k}-arc-strong",
                    survives_bound(n - k + 1)
                ),
            });
            ("extreminf", emit_dg(&d), "dg", expected)
        }
        GadgetKind::T1 => {
            let t = gadgets::witness_t1(k)?;
            let expected = serde_json::json!({
                "claim": format!("no single inversion makes the tournament {k}-strong"),
            });
            ("t1", emit_trn(&t), "trn", expected)
        }
        GadgetKind::T2 => {
            let t = gadgets::witness_t2(k)?;
            let expected = serde_json::json!({
                "claim": format!("no single inversion makes the tournament {k}-arc-strong"),
            });
            ("t2", emit_trn(&t), "trn", expected)
        }
    };

    let order = body
        .lines()
        .next()
        .and_then(|l| l.split_whitespace().next())
        .and_then(|w| w.parse().ok())
        .unwrap_or(0);
    let mut written = Vec::new();
    let graph_path = args.out.with_extension(extension);
    fs::write(&graph_path, &body)?;
    written.push(graph_path.display().to_string());

    let sidecar = serde_json::json!({
        "spec": spec_string(),
        "kind": kind,
        "file": graph_path.display().to_string(),
        "order": order,
        "expected": expected,
    });
    let json_path = args.out.with_extension("json");
    let text = serde_json::to_string_pretty(&sidecar)
        .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))?;
    fs::write(&json_path, text + "\n")?;
    written.push(json_path.display().to_string());

    if args.dot {
        let d = match extension {
            "trn" => parse_trn(&body)?.into_digraph(),
            _ => parse_dg(&body)?,
        };
        let dot_path = args.out.with_extension("dot");
        fs::write(&dot_path, to_dot(&d))?;
        written.push(dot_path.display().to_string());
    }

    let report = GadgetReport {
        spec: spec_string(),
        kind: kind.to_string(),
        order,
        written,
    };
    print_json(&report)?;
    Ok(0)
}

/// Largest family size the padded pair catcher of order `n` is built to
/// survive.
fn survives_bound(n: usize) -> usize {
    if n <= 5 {
        0
    } else {
        let levels = (n - 1).ilog2() as usize + 1;
        levels.div_ceil(2) - 1
    }
}

fn parse_graph_spec(spec: &str, seed: Option<u64>) -> Result<SimpleGraph, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Invalid(format!("bad graph spec {spec:?}; see --help"));
    let parse_n = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["complete", n] => Ok(SimpleGraph::complete(parse_n(n)?)),
        ["cycle", n] => Ok(SimpleGraph::cycle(parse_n(n)?)),
        ["path", n] => Ok(SimpleGraph::path(parse_n(n)?)),
        ["gnp", n, p] => {
            let p: f64 = p.parse().map_err(|_| bad())?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad());
            }
            let seed = seed.ok_or_else(|| Error::Invalid("gnp graphs need --seed".into()))?;
            Ok(SimpleGraph::gnp(parse_n(n)?, p, seed))
        }
        _ => Err(bad()),
    }
}

fn cmd_table(args: TableArgs) -> Result<i32, Error> {
    let range = || -> Result<std::ops::RangeInclusive<usize>, Error> {
        match (args.n_from, args.n_to) {
            (Some(a), Some(b)) if a <= b => Ok(a..=b),
            (Some(_), Some(_)) => Err(Error::Invalid("--n-from exceeds --n-to".into())),
            _ => Err(Error::Invalid(
                "this table needs --n-from and --n-to".into(),
            )),
        }
    };
    emit(&format!("# {}", spec_string()))?;
    match args.kind {
        TableKind::MK => {
            let budget = budget_from(args.max_t)?;
            emit("k,n,classes,m_k,m_k_witness,m_prime_k,m_prime_k_witness,source")?;
            for n in range()? {
                let row = census_row(n, args.k, &budget, args.jobs)?;
                emit(&format!(
                    "{},{},{},{},{},{},{},exhaustive search over all isomorphism classes",
                    row.k,
                    row.n,
                    row.classes,
                    row.m_k,
                    row.m_k_witness,
                    row.m_prime_k,
                    row.m_prime_k_witness
                ))?;
            }
        }
        TableKind::Tt => {
            emit("k,n,value,source")?;
            for n in range()? {
                let cert = construct::tt_construct(n, args.k)?;
                emit(&format!(
                    "{},{},{},verified constructive family",
                    args.k, n, cert.family_size
                ))?;
            }
        }
        TableKind::Thresholds => {
            let k = args.k;
            emit("k,method,min_order,family_bound,source")?;
            emit(&format!(
                "{k},one19k,{},1,order split construction",
                19 * k - 2
            ))?;
            emit(&format!(
                "{k},three11k,{},3,order split construction",
                11 * k - 2
            ))?;
            emit(&format!(
                "{k},sweep2k,{},{},in-degree sweep construction",
                2 * k + 1,
                2 * k
            ))?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CensusReport {
    spec: String,
    row: CensusRow,
}

fn cmd_census(args: CensusArgs) -> Result<i32, Error> {
    let budget = budget_from(args.max_t)?;
    let row = census_row(args.n, args.k, &budget, args.jobs)?;
    let report = CensusReport {
        spec: spec_string(),
        row,
    };
    print_json(&report)?;
    Ok(0)
}
