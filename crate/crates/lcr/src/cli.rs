//! Batch command-line front-end.
//!
//! Exit codes are a stable contract: 0 = yes (or success for commands
//! without a verdict), 1 = no (or invalid sequence), 2 = error, including
//! parse failures and searches refused by the state cap. The cap is taken
//! from `--cap`, then the `LCR_STATE_CAP` environment variable, then the
//! built-in default.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::{self, Family, GenConfig, PairMode};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::json;
use crate::kernel_mw::{kernel_bound_log2, kernelize_mw};
use crate::kernel_vc::{kernelize_vc, min_vertex_cover, split_partition, vc_kernel_bound, VertexCover};
use crate::modular::{compute_md_tree, md_to_pmd};
use crate::reduction::{reduce_is_to_lcr, IsInstance};
use crate::solver::{
    decide, shortest, validate_sequence, DecisionStrategy, ShortestStrategy, SolveOptions,
    SolveReport, Verdict, DEFAULT_STATE_CAP,
};

pub const STATE_CAP_ENV: &str = "LCR_STATE_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "lcr",
    about = "Exact list coloring reconfiguration: solve, kernelize, generate, verify",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the target coloring is reachable from the initial one.
    Solve(SolveArgs),
    /// Compute the weighted shortest reconfiguration length.
    Shortest(ShortestArgs),
    /// Compress an instance and emit the kernel with its log.
    Kernelize(KernelizeArgs),
    /// Build an instance from an independent set input.
    ReduceIs(ReduceIsArgs),
    /// Check a step file against an instance.
    Verify(VerifyArgs),
    /// Generate a corpus instance.
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SolveStrategyArg {
    Auto,
    Brute,
    KernelMw,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ShortestStrategyArg {
    Auto,
    Brute,
    KernelVc,
}

#[derive(Args, Debug)]
struct CommonRunArgs {
    /// Instance files; several files are solved independently.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Write the report (or one report per line) here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the found sequence as a step file (single input only).
    #[arg(long)]
    seq_out: Option<PathBuf>,
    /// State cap override.
    #[arg(long)]
    cap: Option<u64>,
    /// Worker threads across input files.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Print a human-readable summary to stderr.
    #[arg(long)]
    stats: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    common: CommonRunArgs,
    #[arg(long, value_enum, default_value_t = SolveStrategyArg::Auto)]
    strategy: SolveStrategyArg,
}

#[derive(Args, Debug)]
struct ShortestArgs {
    #[command(flatten)]
    common: CommonRunArgs,
    #[arg(long, value_enum, default_value_t = ShortestStrategyArg::Auto)]
    strategy: ShortestStrategyArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KernelParam {
    Mw,
    Vc,
}

#[derive(Args, Debug)]
struct KernelizeArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    param: KernelParam,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReduceIsArgs {
    /// Edge-list file: vertex count, then one 1-based edge per line.
    graphfile: PathBuf,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    seqfile: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Random,
    Cograph,
    Split,
    Reduction,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Reachable,
    Independent,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Reachable)]
    mode: ModeArg,
    /// Independent set size for the reduction family.
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// Weights are drawn from 1..=this; 1 keeps the instance unweighted.
    #[arg(long, default_value_t = 1)]
    max_weight: u64,
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> u8 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve(args) => run_batch(args.common, move |inst, opts| {
            decide(
                inst,
                match args.strategy {
                    SolveStrategyArg::Auto => DecisionStrategy::Auto,
                    SolveStrategyArg::Brute => DecisionStrategy::Brute,
                    SolveStrategyArg::KernelMw => DecisionStrategy::KernelMw,
                },
                opts,
            )
        }),
        Command::Shortest(args) => run_batch(args.common, move |inst, opts| {
            shortest(
                inst,
                match args.strategy {
                    ShortestStrategyArg::Auto => ShortestStrategy::Auto,
                    ShortestStrategyArg::Brute => ShortestStrategy::Brute,
                    ShortestStrategyArg::KernelVc => ShortestStrategy::KernelVc,
                },
                opts,
            )
        }),
        Command::Kernelize(args) => run_kernelize(args),
        Command::ReduceIs(args) => run_reduce_is(args),
        Command::Verify(args) => run_verify(args),
        Command::Gen(args) => run_gen(args),
    }
}

fn state_cap(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(STATE_CAP_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_STATE_CAP)
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Everything needed to render one file's outcome, in input order.
type FileOutcome = (usize, Result<(Instance, Result<SolveReport>)>);

/// Per-file outcome folded into the batch exit code: 2 dominates 1
/// dominates 0.
fn run_batch<F>(common: CommonRunArgs, solve_one: F) -> Result<u8>
where
    F: Fn(&Instance, &SolveOptions) -> Result<SolveReport> + Sync,
{
    let opts = SolveOptions {
        state_cap: state_cap(common.cap),
    };
    if common.seq_out.is_some() && common.files.len() > 1 {
        return Err(Error::InvalidInput(
            "--seq-out needs exactly one input file".into(),
        ));
    }
    let results: Vec<FileOutcome> = {
        let pending = Mutex::new((0..common.files.len()).collect::<Vec<_>>());
        let collected = Mutex::new(Vec::new());
        let workers = common.jobs.max(1).min(common.files.len().max(1));
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let idx = {
                        let mut p = pending.lock().unwrap();
                        if p.is_empty() {
                            break;
                        }
                        p.remove(0)
                    };
                    let outcome = load_instance(&common.files[idx])
                        .map(|inst| {
                            let rep = solve_one(&inst, &opts);
                            (inst, rep)
                        });
                    collected.lock().unwrap().push((idx, outcome));
                });
            }
        });
        let mut c = collected.into_inner().unwrap();
        c.sort_by_key(|(idx, _)| *idx);
        c
    };

    let mut exit = 0u8;
    let mut lines = Vec::new();
    for (idx, outcome) in results {
        let path = &common.files[idx];
        let (value, code) = match outcome {
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                (Value::Null, 2)
            }
            Ok((inst, Err(Error::StateCapExceeded { explored, cap }))) => {
                let _ = inst;
                (json::too_large_report(explored, cap), 2)
            }
            Ok((_, Err(e))) => {
                eprintln!("error: {}: {e}", path.display());
                (Value::Null, 2)
            }
            Ok((inst, Ok(rep))) => {
                let code = match rep.verdict {
                    Verdict::Yes => 0,
                    Verdict::No => 1,
                };
                if common.stats {
                    eprintln!(
                        "{}: verdict={:?} length={:?} states={} strategy={} elapsed={:.1}ms",
                        path.display(),
                        rep.verdict,
                        rep.length,
                        rep.stats.states_explored,
                        rep.stats.strategy,
                        rep.stats.elapsed_ms
                    );
                }
                if let (Some(seq_path), Some(seq)) = (&common.seq_out, &rep.sequence) {
                    fs::write(seq_path, json::emit_sequence(&inst, seq))?;
                }
                (json::report_to_json(&inst, &rep), code)
            }
        };
        exit = exit.max(code);
        if !value.is_null() {
            let mut rendered = if common.files.len() > 1 {
                json!({ "file": path.display().to_string(), "report": value }).to_string()
            } else {
                serde_json::to_string_pretty(&value).expect("report serializes")
            };
            rendered.push('\n');
            lines.push(rendered);
        }
    }
    write_or_print(&common.out, &lines.concat())?;
    Ok(exit)
}

fn load_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path)?;
    json::parse_instance(&text)
}

fn run_kernelize(args: KernelizeArgs) -> Result<u8> {
    let inst = load_instance(&args.file)?;
    let value = match args.param {
        KernelParam::Mw => {
            // Kernelize per connected component; the combined kernel is the
            // restriction to all surviving vertices, and the reported bound
            // uses the worst component's width and clique number.
            let mut survivors: Vec<String> = Vec::new();
            let mut log = Vec::new();
            let mut input_pmw = 2usize;
            for (comp, _) in inst.split_components() {
                input_pmw = input_pmw
                    .max(md_to_pmd(&compute_md_tree(comp.graph())).pseudo_modular_width());
                let (comp_kernel, comp_log) = kernelize_mw(&comp)?;
                survivors.extend(comp_kernel.graph().labels().iter().cloned());
                log.extend(comp_log);
            }
            let keep: Vec<usize> = (0..inst.vertex_count())
                .filter(|&v| survivors.iter().any(|l| l == inst.graph().label(v)))
                .collect();
            let kernel = inst.restrict(&keep);
            let omega = kernel.graph().max_clique_size();
            json!({
                "kernel": serde_json::from_str::<Value>(&json::emit_instance(&kernel)).unwrap(),
                "log": json::replay_log_to_json(&log),
                "vertices_before": inst.vertex_count(),
                "vertices_after": kernel.vertex_count(),
                "bound": {
                    "param": "mw",
                    "pmw": input_pmw,
                    "omega": omega,
                    "log2_size_bound": kernel_bound_log2(
                        omega.max(1) as u64,
                        inst.k() as u64,
                        input_pmw as u64
                    ),
                },
            })
        }
        KernelParam::Vc => {
            let cover = derive_cover(&inst)?;
            let (kernel, log) = kernelize_vc(&inst, &cover)?;
            let tau = cover.size() as u32;
            json!({
                "kernel": serde_json::from_str::<Value>(&json::emit_instance(&kernel)).unwrap(),
                "log": json::merge_log_to_json(&log),
                "vertices_before": inst.vertex_count(),
                "vertices_after": kernel.vertex_count(),
                "bound": {
                    "param": "vc",
                    "cover_size": tau,
                    "independent_bound": bound_as_value(tau, inst.k() as u32),
                },
            })
        }
    };
    let mut text = serde_json::to_string_pretty(&value).expect("kernel output serializes");
    text.push('\n');
    write_or_print(&args.out, &text)?;
    Ok(0)
}

fn bound_as_value(tau: u32, k: u32) -> Value {
    let bound = vc_kernel_bound(tau, k);
    match u64::try_from(bound) {
        Ok(b) => json!(b),
        Err(_) => json!(bound.to_string()),
    }
}

fn derive_cover(inst: &Instance) -> Result<VertexCover> {
    if let Some((clique, _)) = split_partition(inst.graph()) {
        return Ok(VertexCover::new(clique));
    }
    let n = inst.vertex_count();
    Ok((0..=n.min(26))
        .find_map(|bound| min_vertex_cover(inst.graph(), bound))
        .unwrap_or_else(|| VertexCover::new((0..n).collect())))
}

fn run_reduce_is(args: ReduceIsArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.graphfile)?;
    let h = json::parse_is_graph(&text)?;
    let inst = reduce_is_to_lcr(&IsInstance::new(h, args.s)?);
    write_or_print(&args.out, &json::emit_instance(&inst))?;
    Ok(0)
}

fn run_verify(args: VerifyArgs) -> Result<u8> {
    let inst = load_instance(&args.file)?;
    let text = fs::read_to_string(&args.seqfile)?;
    let seq = json::parse_sequence(&text, &inst)?;
    Ok(if validate_sequence(&inst, &seq) { 0 } else { 1 })
}

fn run_gen(args: GenArgs) -> Result<u8> {
    let mut cfg = GenConfig::new(
        match args.family {
            FamilyArg::Random => Family::Random,
            FamilyArg::Cograph => Family::Cograph,
            FamilyArg::Split => Family::Split,
            FamilyArg::Reduction => Family::Reduction,
        },
        args.n,
        args.k,
        args.seed,
    );
    cfg.mode = match args.mode {
        ModeArg::Reachable => PairMode::Reachable,
        ModeArg::Independent => PairMode::Independent,
    };
    cfg.s = args.s;
    cfg.max_weight = args.max_weight;
    cfg.edge_prob = args.edge_prob;
    let inst = corpus::generate(&cfg)?;
    write_or_print(&args.out, &json::emit_instance(&inst))?;
    Ok(0)
}
