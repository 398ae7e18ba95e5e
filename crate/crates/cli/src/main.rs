//! `tfrunner`: one binary exposing the torus-approximation, lonely-runner,
//! and Gabor-verification pipelines with JSON/CSV output for scripting.

mod output;
mod parse;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use tfrunner_core::config;
use tfrunner_core::exact::{RealBasis, RealBasisDto};
use tfrunner_core::gabor::{
    independence_score, sample_system, FunctionModel, PointSet, PointSetDto,
};
use tfrunner_core::instances;
use tfrunner_core::relations::{affine_dimension, relation_lattice, subgroup_basis};
use tfrunner_core::runner::{find_lonely_time, select_spectator, RunnerInstance};
use tfrunner_core::torus::{classify_sequence, kronecker_witness, ApproxTask, WitnessError};
use tfrunner_core::verify::{classify_4pt, verify_4pt, Verdict};

const EXIT_OK: u8 = 0;
const EXIT_DEPENDENT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(
    name = "tfrunner",
    about = "Torus approximation, lonely-runner searches, and Gabor-system independence verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Affine dimension over ℚ of a finite set of reals
    AffineDim(AffineDimArgs),
    /// Integer-relation lattice and free-subgroup decomposition
    Relations(RelationsArgs),
    /// Classify targets and search for a simultaneous-approximation witness
    Approx(ApproxArgs),
    /// Search for a time when all runners are far from the integers
    Runner(RunnerArgs),
    /// Pick a spectator among {1, i, −i} for the extremal velocity ratio
    Spectator(SpectatorArgs),
    /// Gabor-system sampling and Gram-matrix independence scoring
    #[command(subcommand)]
    Gabor(GaborCommand),
    /// Dependence-relation verification pipelines
    #[command(subcommand)]
    Hrt(HrtCommand),
    /// Built-in demonstrations
    #[command(subcommand)]
    Demo(DemoCommand),
}

#[derive(Args)]
struct AffineDimArgs {
    /// Comma-separated rationals, or coefficient tuples a:b:c with --exact
    #[arg(long)]
    omegas: String,
    /// Basis file declaring labels and float values
    #[arg(long)]
    exact: Option<PathBuf>,
}

#[derive(Args)]
struct RelationsArgs {
    #[arg(long)]
    lambdas: String,
    #[arg(long)]
    exact: Option<PathBuf>,
}

#[derive(Args)]
struct ApproxArgs {
    /// Frequencies: rationals/coefficient tuples (exact) or floats with --heuristic
    #[arg(long)]
    lambdas: String,
    /// Target positions on the torus, comma-separated floats
    #[arg(long)]
    targets: String,
    #[arg(long)]
    eps: f64,
    /// Left end of the search window
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = config::DEFAULT_SCAN_BUDGET)]
    budget: u64,
    #[arg(long)]
    exact: Option<PathBuf>,
    /// Treat frequencies as bare floats (relations guessed, flagged)
    #[arg(long)]
    heuristic: bool,
}

#[derive(Args)]
struct RunnerArgs {
    #[arg(long)]
    velocities: String,
    #[arg(long)]
    starts: String,
    #[arg(long, default_value_t = 0.25)]
    target: f64,
    #[arg(long, default_value_t = 0.0)]
    window_start: f64,
    #[arg(long, default_value_t = config::RUNNER_SCAN_BUDGET)]
    budget: u64,
    /// Write a (t, margin) scan to this CSV file instead of searching
    #[arg(long)]
    scan_csv: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-4)]
    scan_step: f64,
    #[arg(long, default_value_t = 10_000)]
    scan_count: u64,
}

#[derive(Args)]
struct SpectatorArgs {
    #[arg(long)]
    velocities: String,
    #[arg(long)]
    starts: String,
}

#[derive(Subcommand)]
enum GaborCommand {
    /// Gram-matrix independence score of G(f, Λ)
    Score(GaborScoreArgs),
    /// Dump the sampled system to CSV
    Samples(GaborSamplesArgs),
}

#[derive(Args)]
struct GaborScoreArgs {
    #[arg(long)]
    function: PathBuf,
    #[arg(long)]
    lambda: PathBuf,
    #[arg(long, default_value_t = config::DEFAULT_WINDOW)]
    window: f64,
    #[arg(long, default_value_t = config::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long)]
    exact: Option<PathBuf>,
}

#[derive(Args)]
struct GaborSamplesArgs {
    #[arg(long)]
    function: PathBuf,
    #[arg(long)]
    lambda: PathBuf,
    #[arg(long, default_value_t = config::DEFAULT_WINDOW)]
    window: f64,
    #[arg(long, default_value_t = config::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long)]
    csv: PathBuf,
    #[arg(long)]
    exact: Option<PathBuf>,
}

#[derive(Subcommand)]
enum HrtCommand {
    /// Verify a candidate dependence relation (or score independence)
    Verify(HrtVerifyArgs),
    /// Classify the frequency pattern of a 4-point set
    Classify(HrtClassifyArgs),
}

#[derive(Args)]
struct HrtVerifyArgs {
    #[arg(long)]
    function: PathBuf,
    #[arg(long)]
    lambda: PathBuf,
    /// JSON array of [re, im] pairs; one per point (null form) or one per
    /// non-origin point (relation form). Omitted: attempt the Gram null
    /// vector.
    #[arg(long)]
    coeffs: Option<PathBuf>,
    #[arg(long)]
    exact: Option<PathBuf>,
    #[arg(long, default_value_t = config::DEFAULT_WINDOW)]
    window: f64,
    #[arg(long, default_value_t = config::DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(Args)]
struct HrtClassifyArgs {
    #[arg(long)]
    lambda: PathBuf,
    #[arg(long)]
    exact: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Reproduce the dependent 2+cos(2πx) six-point system
    Counterexample(CounterexampleArgs),
    /// Seeded random shifted lonely-runner suite
    Suite(SuiteArgs),
}

#[derive(Args)]
struct CounterexampleArgs {
    #[arg(long, default_value_t = 0.3)]
    a: f64,
    #[arg(long, default_value_t = config::DEFAULT_WINDOW)]
    window: f64,
    #[arg(long, default_value_t = config::DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    instances: u32,
    #[arg(long, default_value_t = 0.25 - 1e-9)]
    target: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    init_thread_pool();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

#[cfg(feature = "parallel")]
fn init_thread_pool() {
    if let Ok(v) = std::env::var("TFRUNNER_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn init_thread_pool() {}

fn load_basis(path: &Option<PathBuf>) -> Result<Option<Arc<RealBasis>>> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let dto: RealBasisDto = serde_json::from_str(&text).context("parsing basis file")?;
            Ok(Some(dto.build()?))
        }
    }
}

fn load_function(path: &PathBuf) -> Result<FunctionModel> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).context("parsing function model")
}

fn load_point_set(path: &PathBuf, basis: Option<&Arc<RealBasis>>) -> Result<PointSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let dto: PointSetDto = serde_json::from_str(&text).context("parsing point set")?;
    Ok(dto.bind(basis)?)
}

fn load_coeffs(path: &PathBuf) -> Result<Vec<Complex64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let pairs: Vec<(f64, f64)> = serde_json::from_str(&text).context("parsing coefficients")?;
    Ok(pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::AffineDim(args) => {
            let basis = load_basis(&args.exact)?;
            let omegas = parse::exact_values(&args.omegas, basis.as_ref())?;
            let dim = affine_dimension(&omegas)?;
            output::print_json(&output::AffineDim { affine_dimension: dim })?;
            Ok(EXIT_OK)
        }
        Command::Relations(args) => {
            let basis = load_basis(&args.exact)?;
            let lambdas = parse::exact_values(&args.lambdas, basis.as_ref())?;
            let lattice = relation_lattice(&lambdas)?;
            let sg = subgroup_basis(&lambdas)?;
            output::print_json(&output::Relations::build(&lattice, &sg)?)?;
            Ok(EXIT_OK)
        }
        Command::Approx(args) => {
            let targets = parse::float_list(&args.targets)?;
            let lambdas = if args.heuristic {
                tfrunner_core::torus::Lambdas::Float(parse::float_list(&args.lambdas)?)
            } else {
                let basis = load_basis(&args.exact)?;
                tfrunner_core::torus::Lambdas::Exact(parse::exact_values(
                    &args.lambdas,
                    basis.as_ref(),
                )?)
            };
            let task = ApproxTask::new(lambdas, targets, args.eps, args.alpha, args.budget)?;
            let verdict = classify_sequence(&task)?;
            match kronecker_witness(&task) {
                Ok(witness) => {
                    output::print_json(&output::ApproxResult {
                        verdict,
                        witness: Some(witness),
                        error: None,
                    })?;
                    Ok(EXIT_OK)
                }
                Err(WitnessError::BadSequence(v)) => {
                    output::print_json(&output::ApproxResult {
                        verdict: v,
                        witness: None,
                        error: Some("bad sequence: no witness can exist".into()),
                    })?;
                    Ok(EXIT_OK)
                }
                Err(WitnessError::BudgetExhausted { scanned }) => {
                    output::print_json(&output::ApproxResult {
                        verdict,
                        witness: None,
                        error: Some(format!(
                            "budget exhausted after {scanned} samples (inconclusive)"
                        )),
                    })?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(WitnessError::Input(e)) => bail!(e),
            }
        }
        Command::Runner(args) => {
            let velocities = parse::float_list(&args.velocities)?;
            let starts = parse::float_list(&args.starts)?;
            let inst = RunnerInstance::new(velocities, starts)?;
            if let Some(csv) = &args.scan_csv {
                let mut out = String::from("t,margin\n");
                for k in 0..args.scan_count {
                    let t = args.window_start + k as f64 * args.scan_step;
                    let m = tfrunner_core::runner::runner_margin(&inst, t);
                    out.push_str(&format!("{t},{m}\n"));
                }
                fs::write(csv, out).with_context(|| format!("writing {}", csv.display()))?;
                return Ok(EXIT_OK);
            }
            match find_lonely_time(&inst, args.target, args.window_start, args.budget) {
                Ok(w) => {
                    output::print_json(&output::RunnerResult { witness: Some(w), error: None })?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    output::print_json(&output::RunnerResult {
                        witness: None,
                        error: Some(e.to_string()),
                    })?;
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Spectator(args) => {
            let velocities = parse::float_list(&args.velocities)?;
            let starts = parse::float_list(&args.starts)?;
            let inst = RunnerInstance::new(velocities, starts)?;
            let verdict = select_spectator(&inst)?;
            output::print_json(&verdict)?;
            Ok(EXIT_OK)
        }
        Command::Gabor(GaborCommand::Score(args)) => {
            let basis = load_basis(&args.exact)?;
            let f = load_function(&args.function)?;
            let lam = load_point_set(&args.lambda, basis.as_ref())?;
            let score = independence_score(&f, &lam, args.window, args.samples)?;
            output::print_json(&output::ScoreReport::build(&f, &score))?;
            Ok(EXIT_OK)
        }
        Command::Gabor(GaborCommand::Samples(args)) => {
            let basis = load_basis(&args.exact)?;
            let f = load_function(&args.function)?;
            let lam = load_point_set(&args.lambda, basis.as_ref())?;
            let system = sample_system(&f, &lam, args.window, args.samples)?;
            let mut out = String::from("t");
            for k in 0..lam.len() {
                out.push_str(&format!(",re_{k},im_{k}"));
            }
            out.push('\n');
            for i in 0..system.grid.n {
                out.push_str(&format!("{}", system.grid.t(i)));
                for v in &system.vectors {
                    out.push_str(&format!(",{},{}", v[i].re, v[i].im));
                }
                out.push('\n');
            }
            fs::write(&args.csv, out)
                .with_context(|| format!("writing {}", args.csv.display()))?;
            Ok(EXIT_OK)
        }
        Command::Hrt(HrtCommand::Verify(args)) => {
            let basis = load_basis(&args.exact)?;
            let f = load_function(&args.function)?;
            let lam = load_point_set(&args.lambda, basis.as_ref())?;
            let coeffs = match &args.coeffs {
                Some(p) => Some(load_coeffs(p)?),
                None => None,
            };
            let (coeffs, score) = match coeffs {
                Some(c) => (c, None),
                None => {
                    let score = independence_score(&f, &lam, args.window, args.samples)?;
                    match &score.null_vector {
                        Some(v) => (v.clone(), Some(score)),
                        None => {
                            output::print_json(&output::ScoreReport::build(&f, &score))?;
                            return Ok(EXIT_OK); // independence certificate
                        }
                    }
                }
            };
            let _ = score;
            let report = verify_4pt(&f, &lam, &coeffs)?;
            let code = match report.verdict {
                Verdict::RefutedDependence => EXIT_OK,
                Verdict::NumericallyDependent => EXIT_DEPENDENT,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
            };
            output::print_json(&report)?;
            Ok(code)
        }
        Command::Hrt(HrtCommand::Classify(args)) => {
            let basis = load_basis(&args.exact)?;
            let lam = load_point_set(&args.lambda, basis.as_ref())?;
            let f = FunctionModel::Gaussian { center: 0.0, width: 1.0 };
            let (_, normalized, _) = tfrunner_core::gabor::normalize_origin(&f, &lam);
            let tag = classify_4pt(&normalized)?;
            output::print_json(&tag)?;
            Ok(EXIT_OK)
        }
        Command::Demo(DemoCommand::Counterexample(args)) => {
            let f = FunctionModel::TwoPlusCos;
            let a = args.a;
            let lam = PointSet::from_floats(&[
                (0.0, 0.0),
                (0.0, -1.0),
                (0.0, 1.0),
                (a, 0.0),
                (a, -1.0),
                (a, 1.0),
            ])?;
            let score = independence_score(&f, &lam, args.window, args.samples)?;
            output::print_json(&output::ScoreReport::build(&f, &score))?;
            let dependent = score.min_eigenvalue <= config::NULL_THRESHOLD * score.trace;
            Ok(if dependent { EXIT_DEPENDENT } else { EXIT_OK })
        }
        Command::Demo(DemoCommand::Suite(args)) => {
            let mut rng = instances::suite_rng(args.seed);
            let mut successes = 0u32;
            let mut worst: Option<(f64, Vec<f64>)> = None;
            for _ in 0..args.instances {
                let inst = instances::random_runner_instance(&mut rng);
                match find_lonely_time(&inst, args.target, 0.0, 1 << 20) {
                    Ok(w) => {
                        successes += 1;
                        if worst.as_ref().map(|(m, _)| w.margin < *m).unwrap_or(true) {
                            worst = Some((w.margin, inst.velocities().to_vec()));
                        }
                    }
                    Err(_) => {}
                }
            }
            output::print_json(&output::SuiteReport {
                seed: args.seed,
                instances: args.instances,
                target: args.target,
                successes,
                worst_margin: worst.as_ref().map(|(m, _)| *m),
                worst_velocities: worst.map(|(_, v)| v),
            })?;
            Ok(if successes == args.instances {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            })
        }
    }
}
