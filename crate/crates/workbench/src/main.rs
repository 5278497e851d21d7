//! `poncelet`: verification suites, porism reports, scene construction,
//! two-line analysis and SVG plots.
//!
//! Exit status: 0 when everything checked passes, 1 on a property failure,
//! 2 on bad input or an invalid configuration.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use poncelet_core::algebra::{pn_polynomial, Field};
use poncelet_core::porism::{generate_closing, two_line_closure, two_line_criterion, TwoLineSystem};
use poncelet_workbench::report::{porism_report, sample_dual_chain, Backend};
use poncelet_workbench::scalar::parse_scalar;
use poncelet_workbench::scene::{ChainTrace, SceneDocument};
use poncelet_workbench::suites::{run_suite, run_trial, Oracle, Outcome, Suite};
use poncelet_workbench::svg::{render, Chart, DEFAULT_SAMPLES};

const PASS: u8 = 0;
const PROPERTY_FAILURE: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "poncelet", version, about = "Exact checks of a Poncelet-type porism for lines and a conic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded property suite.
    Verify {
        /// two, pascal, aligned, moebius, dual-moebius or dalignes
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rerun a single trial index and print its instance.
        #[arg(long)]
        trial: Option<u64>,
        /// Perturb every instance before checking (exercises failure reporting).
        #[arg(long, hide = true)]
        broken_oracle: bool,
    },
    /// Check the closure criterion of a scene against sampled chains.
    Porism {
        scene: PathBuf,
        #[arg(long, default_value_t = 50)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "exact")]
        backend: Backend,
    },
    /// Write a closing configuration of `n` lines with one traced polygon.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output scene file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The two-line system u = [[0,1],[1,0]], v = [[1,0],[x,-1]].
    Twolines {
        #[command(subcommand)]
        mode: TwoLinesMode,
    },
    /// Render a scene as SVG.
    Plot {
        scene: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Affine chart: x0, x1 or x2 (the coordinate set to 1).
        #[arg(long, default_value = "x0")]
        chart: Chart,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum TwoLinesMode {
    /// Values of x for which (uv)^n = id: the roots of P_{n-1}.
    Roots {
        #[arg(long)]
        n: usize,
    },
    /// Whether the system with parameter x closes after n steps.
    Check {
        /// A rational or `a + c*sqrt(k)`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { suite, trials, seed, trial, broken_oracle } => {
            let oracle = if broken_oracle { Oracle::Broken } else { Oracle::Exact };
            verify(suite, trials, seed, trial, oracle)
        }
        Command::Porism { scene, starts, seed, backend } => porism(&scene, starts, seed, backend),
        Command::Construct { n, seed, out } => construct(n, seed, out.as_deref()),
        Command::Twolines { mode: TwoLinesMode::Roots { n } } => twolines_roots(n),
        Command::Twolines { mode: TwoLinesMode::Check { x, n } } => twolines_check(&x, n),
        Command::Plot { scene, out, chart, samples } => plot(&scene, &out, chart, samples),
    };
    ExitCode::from(code)
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    INPUT_ERROR
}

fn verify(suite: Suite, trials: u64, seed: u64, trial: Option<u64>, oracle: Oracle) -> u8 {
    if let Some(k) = trial {
        let record = run_trial(suite, seed, k, oracle);
        return match record.outcome {
            Outcome::Pass => {
                println!("suite {} trial {k} (seed {seed}): pass, {} degenerate resamples", suite.name(), record.degenerate);
                PASS
            }
            Outcome::Fail { instance, reason } => {
                println!("suite {} trial {k} (seed {seed}): FAIL: {reason}", suite.name());
                println!("  instance: {instance}");
                PROPERTY_FAILURE
            }
        };
    }
    let report = run_suite(suite, trials, seed, oracle);
    print!("{report}");
    if report.passed() {
        PASS
    } else {
        PROPERTY_FAILURE
    }
}

fn read_scene(path: &Path) -> Result<SceneDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    SceneDocument::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn porism(path: &Path, starts: usize, seed: u64, backend: Backend) -> u8 {
    let scene = match read_scene(path) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let config = scene.configuration();
    let validity = config.validate();
    if !validity.is_valid() {
        let issues: Vec<String> = validity.issues.iter().map(|i| format!("{i:?}")).collect();
        return input_error(format!("invalid configuration: {}", issues.join(", ")));
    }
    match porism_report(&config, starts, seed, backend) {
        Ok(report) => {
            println!("{report}");
            if report.consistent() {
                PASS
            } else {
                PROPERTY_FAILURE
            }
        }
        Err(e) => input_error(e),
    }
}

fn construct(n: usize, seed: u64, out: Option<&Path>) -> u8 {
    if n < 2 {
        return input_error("n must be at least 2");
    }
    let config = match generate_closing(n, seed) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let mut scene = SceneDocument::from_configuration(&config);
    match sample_dual_chain(&config, seed, 0) {
        Ok((Some(chain), _)) => scene.chains.push(ChainTrace::from_chain("C1", &chain)),
        Ok((None, _)) => {}
        Err(e) => return input_error(e),
    }
    let text = scene.serialize();
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                return input_error(format!("{}: {e}", path.display()));
            }
            println!("wrote closing {n}-line scene to {}", path.display());
        }
        None => print!("{text}"),
    }
    PASS
}

fn twolines_roots(n: usize) -> u8 {
    if n < 2 {
        return input_error("n must be at least 2");
    }
    let p = pn_polynomial(n - 1);
    println!("P_{} = {p}", n - 1);
    let Some((exact, approx)) = p.real_roots() else {
        return input_error("coefficients too large for exact root search");
    };
    for r in &exact {
        let minimal = two_line_closure(r, n as u32);
        println!("x = {r} (exact){}", if minimal { "" } else { ", closes earlier" });
    }
    for x in &approx {
        println!("x ~ {x:.12} (irrational, approximate)");
    }
    PASS
}

fn twolines_check(text: &str, n: u32) -> u8 {
    if n < 2 {
        return input_error("n must be at least 2");
    }
    let x = match parse_scalar(text) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let system = TwoLineSystem::new(x.clone());
    println!("x = {x} (~ {:.12})", Field::to_f64(&x));
    println!("(uv)^{n} scalar: {}", system.closes_at(n));
    println!("criterion P_{}(x) = 0, P_{}(x) != 0: {}", n - 1, n - 2, two_line_criterion(&x, n));
    println!("closes first at n = {n}: {}", two_line_closure(&x, n));
    match system.minimal_closing_power(64) {
        Some(k) => println!("minimal closing power: {k}"),
        None => println!("minimal closing power: none up to 64"),
    }
    PASS
}

fn plot(path: &Path, out: &Path, chart: Chart, samples: usize) -> u8 {
    let scene = match read_scene(path) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    if samples < 2 {
        return input_error("samples must be at least 2");
    }
    if let Err(e) = fs::write(out, render(&scene, chart, samples)) {
        return input_error(format!("{}: {e}", out.display()));
    }
    println!("wrote {}", out.display());
    PASS
}
