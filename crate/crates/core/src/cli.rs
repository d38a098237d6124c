//! The `hkcut` command line: `solve`, `gen`, `verify` and `bench`.
//!
//! [`run`] is the whole program minus process I/O; output is collected in
//! buffers and written once by the binary. Exit codes: 0 success, 1
//! verification failure, 2 usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::{gen_random, GenParams};
use crate::hypergraph::Hypergraph;
use crate::io::{parse_instance, write_instance};
use crate::oracle::{self, StructureReport, ORACLE_MAX_N};
use crate::solvers::{solve, Algorithm, Solution, SolveOptions, SolveStats};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "hkcut", version, about = "Exact minimum k-cut for hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Write a random instance.
    Gen(GenArgs),
    /// Check solvers against the oracle and run the structural suites.
    Verify(VerifyArgs),
    /// Print solver statistics on random instances.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    /// recursive, dc or brute
    #[arg(long, default_value = "dc")]
    algo: Algorithm,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    rank_max: usize,
    #[arg(long, default_value_t = 1)]
    weight_max: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 6)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 10)]
    m: usize,
    #[arg(long, default_value_t = 4)]
    rank_max: usize,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Captured result of one CLI invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        CliOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput::ok(text),
                _ => CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match cli.command {
        Command::Solve(a) => run_solve(&a),
        Command::Gen(a) => run_gen(&a),
        Command::Verify(a) => run_verify(&a),
        Command::Bench(a) => run_bench(&a),
    }
}

#[derive(Serialize)]
struct JsonStats {
    terminal_cut_calls: u64,
    recursion_nodes: u64,
    candidates_considered: u64,
    wall_ms: u64,
}

impl From<&SolveStats> for JsonStats {
    fn from(s: &SolveStats) -> Self {
        JsonStats {
            terminal_cut_calls: s.terminal_cut_calls,
            recursion_nodes: s.recursion_nodes,
            candidates_considered: s.candidates_considered,
            wall_ms: s.wall_time.as_millis() as u64,
        }
    }
}

#[derive(Serialize)]
struct JsonSolution {
    n: usize,
    m: usize,
    k: usize,
    algorithm: &'static str,
    cut_value: u64,
    parts: Vec<Vec<usize>>,
    stats: JsonStats,
    format_version: u32,
}

/// The JSON document printed by `solve --json`.
pub fn solution_json(h: &Hypergraph, k: usize, algo: Algorithm, sol: &Solution) -> String {
    let doc = JsonSolution {
        n: h.n(),
        m: h.m(),
        k,
        algorithm: algo.name(),
        cut_value: sol.value,
        parts: sol
            .partition
            .parts()
            .iter()
            .map(|p| p.iter().map(|v| v + 1).collect())
            .collect(),
        stats: JsonStats::from(&sol.stats),
        format_version: FORMAT_VERSION,
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn read_instance(path: &PathBuf) -> std::result::Result<Hypergraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run_solve(a: &SolveArgs) -> CliOutput {
    let h = match read_instance(&a.input) {
        Ok(h) => h,
        Err(e) => return CliOutput::usage(e),
    };
    let opts = SolveOptions {
        threads: a.threads,
        ..SolveOptions::default()
    };
    let sol = match solve(&h, a.k, a.algo, &opts) {
        Ok(sol) => sol,
        Err(e) => return CliOutput::usage(e),
    };
    let mut out = String::new();
    if a.json {
        out.push_str(&solution_json(&h, a.k, a.algo, &sol));
        out.push('\n');
    } else {
        writeln!(out, "cut value: {}", sol.value).unwrap();
        writeln!(out, "parts (k = {}):", a.k).unwrap();
        for part in sol.partition.parts() {
            let ids: Vec<String> = part.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(out, "  {}", ids.join(" ")).unwrap();
        }
    }
    CliOutput::ok(out)
}

fn run_gen(a: &GenArgs) -> CliOutput {
    let params = GenParams {
        n: a.n,
        m: a.m,
        rank_max: a.rank_max,
        weight_max: a.weight_max,
        seed: a.seed,
    };
    let h = match gen_random(&params) {
        Ok(h) => h,
        Err(e) => return CliOutput::usage(e),
    };
    let text = write_instance(&h);
    match &a.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => CliOutput::ok(String::new()),
            Err(e) => CliOutput::usage(format!("{}: {e}", path.display())),
        },
        None => CliOutput::ok(text),
    }
}

/// One randomly drawn verification instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub id: usize,
    pub params: GenParams,
    pub instance: Hypergraph,
}

/// The instance stream for `verify`: a master ChaCha8 stream seeded with
/// `seed` draws, per trial, `n` in `[lo, max_n]` with `lo = max(k + 1, 2k)`
/// (clamped), `m <= 12`, rank `<= 5`, weights unit or `<= 5`, and a seed for
/// [`gen_random`].
pub fn verify_trials(k: usize, trials: usize, seed: u64, max_n: usize) -> Result<Vec<Trial>> {
    if k == 0 {
        return Err(Error::KZero);
    }
    if max_n < k.max(2) {
        return Err(Error::InvalidParams(format!("max_n = {max_n} is below k = {k}")));
    }
    if max_n > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n: max_n,
            max: ORACLE_MAX_N,
        });
    }
    let lo = (k + 1).max(2 * k).min(max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|id| {
            let n = rng.gen_range(lo..=max_n);
            let params = GenParams {
                n,
                m: rng.gen_range(0..=12),
                rank_max: rng.gen_range(2..=n.min(5)),
                weight_max: if rng.gen_bool(0.5) { 1 } else { 5 },
                seed: rng.gen(),
            };
            Ok(Trial {
                id,
                params,
                instance: gen_random(&params)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EquivalenceFailure {
    pub trial: usize,
    pub instance: String,
    pub brute_force: u64,
    pub recursive: u64,
    pub divide_conquer: u64,
}

/// Deterministic outcome of `verify`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
    pub equivalence_failures: Vec<EquivalenceFailure>,
    pub small_witness: StructureReport,
    pub split_recovery: StructureReport,
    pub format_version: u32,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.equivalence_failures.is_empty() && self.small_witness.passed() && self.split_recovery.passed()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "verify k={} trials={} seed={} max_n={}",
            self.k, self.trials, self.seed, self.max_n
        )
        .unwrap();
        writeln!(
            out,
            "oracle equivalence: {}/{} agree",
            self.trials - self.equivalence_failures.len(),
            self.trials
        )
        .unwrap();
        for f in &self.equivalence_failures {
            writeln!(
                out,
                "  trial {}: brute {} recursive {} dc {}\n{}",
                f.trial,
                f.brute_force,
                f.recursive,
                f.divide_conquer,
                indent(&f.instance)
            )
            .unwrap();
        }
        for (name, r) in [
            ("small witness", &self.small_witness),
            ("split recovery", &self.split_recovery),
        ] {
            writeln!(
                out,
                "{name}: {} instances, {} cases, {} failures",
                r.instances_checked,
                r.cases_checked,
                r.failures.len()
            )
            .unwrap();
            for f in &r.failures {
                writeln!(
                    out,
                    "  {} (k = {}): {}\n{}",
                    f.property,
                    f.k,
                    f.assignment,
                    indent(&f.instance)
                )
                .unwrap();
            }
        }
        writeln!(out, "status: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}

struct TrialOutcome {
    equivalence: Option<EquivalenceFailure>,
    small_witness: StructureReport,
    split_recovery: StructureReport,
}

fn check_trial(t: &Trial, k: usize) -> Result<TrialOutcome> {
    let h = &t.instance;
    let opts = SolveOptions {
        threads: None,
        component_shortcut: false,
    };
    let bf = solve(h, k, Algorithm::BruteForce, &opts)?.value;
    let rec = solve(h, k, Algorithm::Recursive, &opts)?.value;
    let dc = solve(h, k, Algorithm::DivideConquer, &opts)?.value;
    let equivalence = (bf != rec || bf != dc).then(|| EquivalenceFailure {
        trial: t.id,
        instance: write_instance(h),
        brute_force: bf,
        recursive: rec,
        divide_conquer: dc,
    });
    Ok(TrialOutcome {
        equivalence,
        small_witness: oracle::check_small_witness(h, k)?,
        split_recovery: oracle::check_split_recovery(h, k)?,
    })
}

/// Runs the oracle-equivalence and structural suites over
/// [`verify_trials`]. Trials run in parallel and merge in trial order.
pub fn verify(k: usize, trials: usize, seed: u64, max_n: usize) -> Result<VerifyReport> {
    let stream = verify_trials(k, trials, seed, max_n)?;
    let outcomes: Vec<TrialOutcome> = stream.par_iter().map(|t| check_trial(t, k)).collect::<Result<_>>()?;
    let mut report = VerifyReport {
        k,
        trials,
        seed,
        max_n,
        format_version: FORMAT_VERSION,
        ..VerifyReport::default()
    };
    for o in outcomes {
        report.equivalence_failures.extend(o.equivalence);
        report.small_witness.merge(o.small_witness);
        report.split_recovery.merge(o.split_recovery);
    }
    Ok(report)
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> std::result::Result<T, String> {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| e.to_string()),
        None => Ok(f()),
    }
}

fn run_verify(a: &VerifyArgs) -> CliOutput {
    let report = match with_threads(a.threads, || verify(a.k, a.trials, a.seed, a.max_n)) {
        Ok(Ok(r)) => r,
        Ok(Err(e)) => return CliOutput::usage(e),
        Err(e) => return CliOutput::usage(e),
    };
    let stdout = if a.json {
        serde_json::to_string_pretty(&report).expect("plain data serializes") + "\n"
    } else {
        report.to_text()
    };
    CliOutput {
        code: if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout,
        stderr: String::new(),
    }
}

fn run_bench(a: &BenchArgs) -> CliOutput {
    if a.k == 0 || a.n_min < a.k.max(2) || a.n_min > a.n_max || a.trials == 0 {
        return CliOutput::usage("need 1 <= k <= n_min <= n_max and trials >= 1");
    }
    let opts = SolveOptions {
        threads: None,
        component_shortcut: false,
    };
    let mut out = String::new();
    writeln!(
        out,
        "{:<10} {:>3} {:>3} {:>6} {:>14} {:>10} {:>12} {:>10}",
        "algorithm", "k", "n", "trials", "terminal_cuts", "nodes", "candidates", "wall_ms"
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    for n in a.n_min..=a.n_max {
        let instances: Vec<Hypergraph> = (0..a.trials)
            .map(|_| {
                gen_random(&GenParams {
                    n,
                    m: a.m,
                    rank_max: a.rank_max.clamp(2, n),
                    weight_max: 5,
                    seed: rng.gen(),
                })
            })
            .collect::<Result<_>>()
            .expect("clamped params are valid");
        for algo in [Algorithm::Recursive, Algorithm::DivideConquer] {
            let mut total = SolveStats::default();
            for h in &instances {
                match solve(h, a.k, algo, &opts) {
                    Ok(sol) => total += sol.stats,
                    Err(e) => return CliOutput::usage(e),
                }
            }
            let t = a.trials as u64;
            writeln!(
                out,
                "{:<10} {:>3} {:>3} {:>6} {:>14} {:>10} {:>12} {:>10}",
                algo.name(),
                a.k,
                n,
                a.trials,
                total.terminal_cut_calls / t,
                total.recursion_nodes / t,
                total.candidates_considered / t,
                total.wall_time.as_millis() as u64 / t
            )
            .unwrap();
        }
    }
    CliOutput::ok(out)
}
