//! Argument parsing and command dispatch. Everything a command prints is
//! collected first and returned together with the exit code.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use super::files::{resolve_target, SystemFile};
use super::report::{self, SolveContext};
use crate::error::Error;
use crate::experiments::{
    random_search, shapiro_default_roots, shapiro_matrix, shapiro_verify, verify_counterexample, SearchConfig,
};
use crate::homotopy::{solve_system, TrackerConfig};
use crate::polemap::{build_fiber_system, FiberMode, TargetPoly};
use crate::sysmodel::{classify_genericity, schubert_degree, Field};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default worker thread count.
pub const THREADS_ENV: &str = "POLEFIBER_THREADS";

#[derive(Debug, Parser)]
#[command(name = "polefiber", version, about = "Static output feedback pole placement fibers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schubert degree d(m,p) and its parity.
    Degree {
        m: usize,
        p: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generic surjectivity verdict for (m, p, n).
    Classify {
        m: usize,
        p: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::Real)]
        field: FieldArg,
        #[arg(long)]
        json: bool,
    },
    /// Solve the fiber of a plant over a target polynomial.
    Solve {
        system: PathBuf,
        /// Target document, or inline roots such as `-8,-6,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, value_enum, default_value_t = ModeArg::CoeffMatch)]
        mode: ModeArg,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Solve the built-in (4,2) counterexample and compare with its printed solutions.
    VerifyCounterexample {
        #[command(flatten)]
        solver: SolverArgs,
        /// Track only the first N paths (harness self-test).
        #[arg(long, hide = true)]
        path_limit: Option<usize>,
    },
    /// Build the moment-curve plant and check that its fiber is all real.
    Shapiro {
        m: usize,
        p: usize,
        /// Distinct rational roots; default 1, -1, 2, -2, ...
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        /// Print the plant and stop.
        #[arg(long)]
        no_solve: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Random plants and targets; counts all-real and all-complex fibers.
    Search {
        #[arg(long, default_value_t = 70)]
        plants: usize,
        #[arg(long, default_value_t = 25)]
        targets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-40:40", allow_hyphen_values = true, value_parser = parse_range)]
        coeff_range: (i64, i64),
        #[arg(long, default_value = "-12:12", allow_hyphen_values = true, value_parser = parse_range)]
        root_range: (i64, i64),
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FieldArg {
    Real,
    Complex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    RootEval,
    CoeffMatch,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
    let lo = lo.trim().parse::<i64>().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi = hi.trim().parse::<i64>().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Errors caused by the caller's input exit with 2; broken internal
/// identities exit with 1.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn error_outcome(e: &Error) -> Outcome {
    Outcome {
        code: exit_code_for(e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command).unwrap_or_else(|e| error_outcome(&e)),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

fn check_dims(m: usize, p: usize) -> crate::Result<()> {
    if m == 0 || p == 0 {
        return Err(Error::InvalidArgument(format!("m and p must be at least 1, got ({m}, {p})")));
    }
    Ok(())
}

fn execute(command: Command) -> crate::Result<Outcome> {
    match command {
        Command::Degree { m, p, json } => {
            check_dims(m, p)?;
            let r = report::degree_report(m, p);
            Ok(Outcome::ok(if json { report::to_json(&r) } else { report::render_degree(&r) }))
        }
        Command::Classify { m, p, n, field, json } => {
            let field = match field {
                FieldArg::Real => Field::Real,
                FieldArg::Complex => Field::AlgebraicallyClosed,
            };
            let v = classify_genericity(m, p, n, field)?;
            let r = report::classify_report(m, p, n, field, &v);
            Ok(Outcome::ok(if json { report::to_json(&r) } else { report::render_classify(&r) }))
        }
        Command::Solve {
            system,
            target,
            mode,
            solver,
        } => cmd_solve(&system, &target, mode, &solver),
        Command::VerifyCounterexample { solver, path_limit } => {
            let mut cfg = TrackerConfig::with_seed(solver.seed);
            cfg.path_limit = path_limit;
            let r = verify_counterexample(&cfg)?;
            let code = if r.passed() { EXIT_OK } else { EXIT_FAILURE };
            let text = if solver.json { report::to_json(&r) } else { report::render_counterexample(&r) };
            Ok(Outcome::with_code(code, text))
        }
        Command::Shapiro {
            m,
            p,
            roots,
            no_solve,
            solver,
        } => cmd_shapiro(m, p, roots.as_deref(), no_solve, &solver),
        Command::Search {
            plants,
            targets,
            seed,
            coeff_range,
            root_range,
            m,
            p,
            json,
        } => {
            let cfg = SearchConfig {
                num_plants: plants,
                targets_per_plant: targets,
                coeff_range,
                root_range,
                m,
                p,
                seed,
            };
            let r = random_search(&cfg)?;
            let text = if json {
                report::to_json(&r)
            } else {
                let mut t = report::render_search(&r);
                t.push_str(&format!("runtime {:.2?}\n", r.runtime));
                t
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn cmd_solve(path: &std::path::Path, target: &str, mode: ModeArg, solver: &SolverArgs) -> crate::Result<Outcome> {
    let file = SystemFile::read(path)?;
    let plant = file.to_plant()?;
    let target = resolve_target(target)?;
    let mode = match mode {
        ModeArg::RootEval => FiberMode::RootEval,
        ModeArg::CoeffMatch => FiberMode::CoeffMatch,
    };
    let fiber = build_fiber_system(&plant, &target, mode)?;
    let cfg = TrackerConfig::with_seed(solver.seed);
    let set = solve_system(&fiber.system, &cfg)?;
    let ctx = SolveContext {
        name: file.name.clone(),
        m: plant.m,
        p: plant.p,
        n: plant.n,
        target: &target,
        mode,
    };
    let r = report::solve_report(&ctx, &set, &cfg);
    let expected = r.degree.as_ref().and_then(|d| d.parse::<usize>().ok());
    let incomplete = r.paths_failed > 0 && expected.is_some_and(|d| r.num_solutions < d);
    let code = if r.unpaired > 0 || incomplete { EXIT_FAILURE } else { EXIT_OK };
    let text = if solver.json { report::to_json(&r) } else { report::render_solve(&r) };
    Ok(Outcome::with_code(code, text))
}

fn cmd_shapiro(m: usize, p: usize, roots: Option<&str>, no_solve: bool, solver: &SolverArgs) -> crate::Result<Outcome> {
    check_dims(m, p)?;
    let display = report::render_poly_rows(&shapiro_matrix(m, p, None)?, p);
    if no_solve {
        return Ok(Outcome::ok(display));
    }
    let target = match roots {
        Some(r) => TargetPoly::parse_roots(r)?,
        None => TargetPoly::from_int_roots(&shapiro_default_roots(m * p))?,
    };
    if schubert_degree(m, p).to_usize().is_none() {
        return Err(Error::Unsupported(format!("d({m},{p}) is too large to solve")));
    }
    let cfg = TrackerConfig::with_seed(solver.seed);
    let r = shapiro_verify(m, p, &target, &cfg)?;
    let code = if r.passed() { EXIT_OK } else { EXIT_FAILURE };
    let text = if solver.json {
        report::to_json(&r)
    } else {
        format!("{display}{}", report::render_shapiro(&r))
    };
    Ok(Outcome::with_code(code, text))
}

/// Size the global thread pool from `POLEFIBER_THREADS` when it is set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}
